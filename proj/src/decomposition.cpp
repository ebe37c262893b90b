#include "monomideal/decomposition.hpp"

#include <algorithm>
#include <map>

namespace monomideal {

IrreducibleComponent::IrreducibleComponent(Monomial powers) : powers_(std::move(powers)) {
    if (powers_.is_unit()) throw std::invalid_argument("irreducible component needs an entry");
}

bool IrreducibleComponent::contains(const Monomial& u) const {
    for (std::size_t i = 0; i < powers_.size(); ++i)
        if (powers_[i] > 0 && u[i] >= powers_[i]) return true;
    return false;
}

bool IrreducibleComponent::is_contained_in(const IrreducibleComponent& other) const {
    for (std::size_t i = 0; i < powers_.size(); ++i) {
        if (powers_[i] == 0) continue;
        if (other.powers_[i] == 0 || powers_[i] < other.powers_[i]) return false;
    }
    return true;
}

MonomialIdeal IrreducibleComponent::to_ideal(const RingPtr& ring) const {
    std::vector<Monomial> gens;
    for (std::size_t i = 0; i < powers_.size(); ++i)
        if (powers_[i] > 0) gens.push_back(Monomial::variable(powers_.size(), i, powers_[i]));
    return MonomialIdeal(ring, std::move(gens));
}

bool Decomposition::contains(const Monomial& u) const {
    return std::all_of(components.begin(), components.end(),
                       [&](const IrreducibleComponent& q) { return q.contains(u); });
}

MonomialIdeal Decomposition::intersection(const RingPtr& ring) const {
    MonomialIdeal acc = MonomialIdeal::unit(ring);
    for (const auto& q : components) acc = intersect(acc, q.to_ideal(ring));
    return acc;
}

namespace {

using Powers = std::vector<Monomial>;

/// Drop duplicates and every component that contains another one. For
/// irreducible components this is already global irredundancy.
void prune(Powers& comps) {
    std::sort(comps.begin(), comps.end());
    comps.erase(std::unique(comps.begin(), comps.end()), comps.end());
    std::vector<IrreducibleComponent> qs;
    qs.reserve(comps.size());
    for (const auto& c : comps) qs.emplace_back(c);
    Powers kept;
    for (std::size_t k = 0; k < qs.size(); ++k) {
        bool redundant = false;
        for (std::size_t l = 0; l < qs.size() && !redundant; ++l)
            redundant = l != k && qs[l].is_contained_in(qs[k]);
        if (!redundant) kept.push_back(comps[k]);
    }
    comps = std::move(kept);
}

class Splitter {
public:
    explicit Splitter(const RingPtr& ring) : ring_(ring) {}

    const Powers& run(const std::vector<Monomial>& gens) {
        if (auto it = memo_.find(gens); it != memo_.end()) return it->second;

        // Lexicographically first generator that is not a pure power.
        auto split = std::find_if(gens.begin(), gens.end(),
                                  [](const Monomial& g) { return !g.is_pure_power(); });
        Powers result;
        if (split == gens.end()) {
            Monomial powers = Monomial::unit(ring_->size());
            for (const auto& g : gens) {
                auto v = static_cast<std::size_t>(std::countr_zero(g.support()));
                powers[v] = g[v];
            }
            result.push_back(std::move(powers));
        } else {
            const auto v = static_cast<std::size_t>(std::countr_zero(split->support()));
            const Monomial head = Monomial::variable(ring_->size(), v, (*split)[v]);
            const Monomial tail = *split / head;
            for (const auto& piece : {head, tail}) {
                std::vector<Monomial> next = gens;
                next.push_back(piece);
                MonomialIdeal sub(ring_, std::move(next));
                const Powers& part = run(sub.gens());
                result.insert(result.end(), part.begin(), part.end());
            }
            prune(result);
        }
        return memo_.emplace(gens, std::move(result)).first->second;
    }

private:
    RingPtr ring_;
    std::map<std::vector<Monomial>, Powers> memo_;
};

} // namespace

Decomposition irreducible_decomposition(const MonomialIdeal& ideal) {
    ideal.require_proper_nonzero("irreducible_decomposition");
    Splitter splitter(ideal.ring());
    Powers powers = splitter.run(ideal.gens());
    prune(powers);

    Decomposition d;
    for (auto& p : powers) d.components.emplace_back(std::move(p));
    std::sort(d.components.begin(), d.components.end(),
              [](const IrreducibleComponent& a, const IrreducibleComponent& b) {
                  if (auto c = a.radical() <=> b.radical(); c != 0) return c < 0;
                  return a.powers() < b.powers();
              });
    return d;
}

bool is_irredundant(const Decomposition& d, const RingPtr& ring) {
    for (std::size_t k = 0; k < d.components.size(); ++k) {
        MonomialIdeal others = MonomialIdeal::unit(ring);
        for (std::size_t l = 0; l < d.components.size(); ++l)
            if (l != k) others = intersect(others, d.components[l].to_ideal(ring));
        const bool enlarges = std::any_of(others.gens().begin(), others.gens().end(),
                                          [&](const Monomial& g) { return !d.components[k].contains(g); });
        if (!enlarges) return false;
    }
    return true;
}

std::vector<MonomialPrime> minimal_elements(std::vector<MonomialPrime> primes) {
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    std::vector<MonomialPrime> out;
    for (const auto& p : primes) {
        bool embedded = std::any_of(out.begin(), out.end(), [&](const MonomialPrime& q) { return p.contains(q); });
        if (!embedded) out.push_back(p);
    }
    return out;
}

std::vector<MonomialPrime> associated_primes(const MonomialIdeal& ideal) {
    auto d = irreducible_decomposition(ideal);
    std::vector<MonomialPrime> out;
    for (const auto& q : d.components) out.push_back(q.radical());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<MonomialPrime> minimal_primes(const MonomialIdeal& ideal) {
    return minimal_elements(associated_primes(ideal));
}

int height(const MonomialIdeal& ideal) {
    auto mins = minimal_primes(ideal);
    int h = mins.front().height();
    for (const auto& p : mins) h = std::min(h, p.height());
    return h;
}

int dim_quotient(const MonomialIdeal& ideal) {
    return static_cast<int>(ideal.nvars()) - height(ideal);
}

bool satisfies_S1(const MonomialIdeal& ideal) {
    return associated_primes(ideal).size() == minimal_primes(ideal).size();
}

} // namespace monomideal
