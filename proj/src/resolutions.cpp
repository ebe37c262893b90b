#include "monomideal/resolutions.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "monomideal/simplicial.hpp"

namespace monomideal {

std::uint64_t BettiTable::at(int i, int j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
}

int BettiTable::max_index() const {
    int best = -1;
    for (const auto& [key, value] : entries) best = std::max(best, key.first);
    return best;
}

BettiTable BettiTable::quotient() const {
    if (subject == BettiSubject::Quotient) return *this;
    BettiTable q;
    q.subject = BettiSubject::Quotient;
    q.entries[{0, 0}] = 1;
    for (const auto& [key, value] : entries) q.entries[{key.first + 1, key.second}] = value;
    return q;
}

namespace {

/// All unions of nonempty sets of generator supports.
std::vector<VarSet> lcm_lattice(const std::vector<VarSet>& supports) {
    std::unordered_set<VarSet> seen;
    std::vector<VarSet> order;
    for (VarSet g : supports) {
        const std::size_t existing = order.size();
        if (seen.insert(g).second) order.push_back(g);
        for (std::size_t k = 0; k < existing; ++k) {
            const VarSet u = order[k] | g;
            if (seen.insert(u).second) order.push_back(u);
        }
    }
    std::sort(order.begin(), order.end());
    return order;
}

void require_betti_input(const MonomialIdeal& ideal, const char* operation) {
    ideal.require_proper_nonzero(operation);
}

} // namespace

BettiTable hochster_betti(const MonomialIdeal& ideal) {
    ideal.require_squarefree("hochster_betti");
    require_betti_input(ideal, "hochster_betti");
    const auto complex = complex_of_ideal(ideal);
    const auto characteristic = ideal.ring()->characteristic();

    BettiTable table;
    for (VarSet s : lcm_lattice(ideal.supports())) {
        const int size = popcount(s);
        const auto h = reduced_homology(induced(complex, s), characteristic);
        for (const auto& [k, rank] : h.ranks) {
            const int i = size - k - 2;
            if (rank == 0 || i < 0) continue;
            table.entries[{i, size}] += rank;
        }
    }
    return table;
}

BettiTable koszul_betti(const MonomialIdeal& ideal) {
    require_betti_input(ideal, "koszul_betti");
    const std::size_t n = ideal.nvars();
    const auto characteristic = ideal.ring()->characteristic();

    std::set<Monomial> seen;
    std::vector<Monomial> lattice;
    for (const auto& g : ideal.gens()) {
        const std::size_t existing = lattice.size();
        if (seen.insert(g).second) lattice.push_back(g);
        for (std::size_t k = 0; k < existing; ++k) {
            auto u = lcm(lattice[k], g);
            if (seen.insert(u).second) lattice.push_back(std::move(u));
        }
    }

    BettiTable table;
    for (const auto& b : lattice) {
        const VarSet s = b.support();
        std::vector<Face> faces;
        for (VarSet f = s;; f = (f - 1) & s) {
            if (ideal.contains(b / Monomial::from_set(n, f))) faces.push_back(f);
            if (f == 0) break;
        }
        const auto h = reduced_homology(SimplicialComplex(n, std::move(faces)), characteristic);
        for (const auto& [k, rank] : h.ranks)
            if (rank) table.entries[{k + 1, static_cast<int>(b.degree())}] += rank;
    }
    return table;
}

BettiTable betti_table(const MonomialIdeal& ideal) {
    require_betti_input(ideal, "betti_table");
    if (ideal.is_squarefree()) return hochster_betti(ideal);
    return hochster_betti(polarize(ideal).ideal);
}

int regularity(const MonomialIdeal& ideal) {
    const auto table = betti_table(ideal);
    int reg = 0;
    for (const auto& [key, value] : table.entries) reg = std::max(reg, key.second - key.first);
    return reg;
}

int proj_dim(const MonomialIdeal& ideal) { return betti_table(ideal).max_index() + 1; }

int depth_quotient(const MonomialIdeal& ideal) {
    return static_cast<int>(ideal.nvars()) - proj_dim(ideal);
}

bool has_linear_resolution(const MonomialIdeal& ideal) {
    require_betti_input(ideal, "has_linear_resolution");
    const auto d = static_cast<int>(ideal.min_degree());
    if (ideal.max_degree() != ideal.min_degree()) return false;
    const auto table = ideal.is_squarefree() ? hochster_betti(ideal) : koszul_betti(ideal);
    return std::all_of(table.entries.begin(), table.entries.end(),
                       [&](const auto& kv) { return kv.first.second == kv.first.first + d; });
}

MonomialIdeal squarefree_component(const MonomialIdeal& ideal, int j) {
    ideal.require_squarefree("squarefree_component");
    const std::size_t n = ideal.nvars();
    const VarSet all = n == 64 ? ~VarSet{0} : (VarSet{1} << n) - 1;
    std::unordered_set<VarSet> found;
    if (j >= 0 && static_cast<std::size_t>(j) <= n) {
        for (VarSet g : ideal.supports()) {
            if (popcount(g) > j) continue;
            const VarSet rest = all & ~g;
            const int extra = j - popcount(g);
            for (VarSet s = rest;; s = (s - 1) & rest) {
                if (popcount(s) == extra) found.insert(g | s);
                if (s == 0) break;
            }
        }
    }
    return MonomialIdeal::from_sets(ideal.ring(), {found.begin(), found.end()});
}

MonomialIdeal degree_component(const MonomialIdeal& ideal, int j) {
    const std::size_t n = ideal.nvars();
    std::vector<Monomial> out;
    // Multiply each generator by every monomial of the missing degree.
    for (const auto& g : ideal.gens()) {
        if (static_cast<int>(g.degree()) > j) continue;
        const auto extra = static_cast<Exponent>(j - static_cast<int>(g.degree()));
        std::vector<Exponent> e(n, 0);
        // Enumerate compositions of `extra` into n parts.
        auto emit = [&](auto&& self, std::size_t pos, Exponent left) -> void {
            if (pos + 1 == n) {
                e[pos] = left;
                out.push_back(g * Monomial(e));
                return;
            }
            for (Exponent a = 0; a <= left; ++a) {
                e[pos] = a;
                self(self, pos + 1, left - a);
            }
        };
        emit(emit, 0, extra);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    // Every generated monomial has degree j, so minimization keeps them all.
    return MonomialIdeal(ideal.ring(), std::move(out));
}

bool is_componentwise_linear(const MonomialIdeal& ideal) {
    require_betti_input(ideal, "is_componentwise_linear");
    if (ideal.is_squarefree()) {
        for (auto j = static_cast<int>(ideal.min_degree()); j <= static_cast<int>(ideal.nvars()); ++j) {
            const auto component = squarefree_component(ideal, j);
            if (component.is_zero()) continue;
            if (!has_linear_resolution(component)) return false;
        }
        return true;
    }
    // I_<j> has a linear resolution for every j >= reg(I), so the scan stops there.
    const int reg = regularity(ideal);
    for (auto j = static_cast<int>(ideal.min_degree()); j <= reg; ++j) {
        const auto component = degree_component(ideal, j);
        if (component.is_zero()) continue;
        if (!has_linear_resolution(component)) return false;
    }
    return true;
}

namespace {

class LinearQuotientSearch {
public:
    LinearQuotientSearch(const std::vector<Monomial>& gens, const Deadline& deadline)
        : gens_(gens), deadline_(deadline) {}

    bool run(std::vector<Monomial>& order) {
        std::vector<bool> used(gens_.size(), false);
        std::vector<std::size_t> chosen;
        if (!extend(used, chosen)) return false;
        for (auto i : chosen) order.push_back(gens_[i]);
        return true;
    }

private:
    /// ((chosen) : u) is generated by variables.
    bool linear_colon(const std::vector<std::size_t>& chosen, const Monomial& u) const {
        VarSet linear = 0;
        std::vector<Monomial> quotients;
        quotients.reserve(chosen.size());
        for (auto j : chosen) {
            quotients.push_back(gens_[j] / gcd(gens_[j], u));
            if (quotients.back().degree() == 1) linear |= quotients.back().support();
        }
        return std::all_of(quotients.begin(), quotients.end(),
                           [&](const Monomial& q) { return (q.support() & linear) != 0; });
    }

    bool extend(std::vector<bool>& used, std::vector<std::size_t>& chosen) {
        if (chosen.size() == gens_.size()) return true;
        if (++nodes_ % 512 == 0) deadline_.check("linear quotients search");
        if (failed_.contains(used)) return false;

        std::size_t first = 0;
        while (used[first]) ++first;
        const auto degree = gens_[first].degree();
        for (std::size_t i = first; i < gens_.size() && gens_[i].degree() == degree; ++i) {
            if (used[i] || !linear_colon(chosen, gens_[i])) continue;
            used[i] = true;
            chosen.push_back(i);
            if (extend(used, chosen)) return true;
            chosen.pop_back();
            used[i] = false;
        }
        failed_.insert(used);
        return false;
    }

    const std::vector<Monomial>& gens_;
    const Deadline& deadline_;
    std::size_t nodes_ = 0;
    std::unordered_set<std::vector<bool>> failed_;
};

} // namespace

LinearQuotientsResult find_linear_quotients(const MonomialIdeal& ideal, const Deadline& deadline) {
    require_betti_input(ideal, "find_linear_quotients");
    LinearQuotientsResult result;
    LinearQuotientSearch search(ideal.gens(), deadline);
    result.has_linear_quotients = search.run(result.order);
    return result;
}

bool has_linear_quotients(const MonomialIdeal& ideal, const Deadline& deadline) {
    return find_linear_quotients(ideal, deadline).has_linear_quotients;
}

bool is_linear_quotient_order(const MonomialIdeal& ideal, const std::vector<Monomial>& order) {
    auto sorted = order;
    std::sort(sorted.begin(), sorted.end(), grlex_less);
    if (sorted != ideal.gens()) return false;
    for (std::size_t k = 1; k < order.size(); ++k) {
        const MonomialIdeal prefix(ideal.ring(), {order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k)});
        if (!colon(prefix, order[k]).is_prime()) return false;
    }
    return true;
}

Polarization polarize(const MonomialIdeal& ideal) {
    ideal.require_proper_nonzero("polarize");
    const auto& ring = *ideal.ring();
    const Monomial top = ideal.lcm_of_generators();

    Polarization result;
    std::vector<std::string> names;
    std::vector<std::size_t> offset(ideal.nvars(), 0);
    for (std::size_t i = 0; i < ideal.nvars(); ++i) {
        offset[i] = names.size();
        for (Exponent k = 1; k <= top[i]; ++k) {
            names.push_back(ring.name(i) + "_" + std::to_string(k));
            result.origin.emplace_back(i, k);
        }
    }
    auto new_ring = std::make_shared<const Ring>(std::move(names), ring.characteristic());

    std::vector<Monomial> gens;
    for (const auto& g : ideal.gens()) {
        Monomial p = Monomial::unit(new_ring->size());
        for (std::size_t i = 0; i < g.size(); ++i)
            for (Exponent k = 0; k < g[i]; ++k) p[offset[i] + k] = 1;
        gens.push_back(std::move(p));
    }
    result.ideal = MonomialIdeal(std::move(new_ring), std::move(gens));
    return result;
}

} // namespace monomideal
