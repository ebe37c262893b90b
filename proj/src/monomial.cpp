#include "monomideal/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace monomideal {

Ring::Ring(std::vector<std::string> names, std::uint32_t characteristic, Exponent exponent_cap)
    : names_(std::move(names)), characteristic_(characteristic), exponent_cap_(exponent_cap) {
    if (names_.empty()) throw std::invalid_argument("ring needs at least one variable");
    if (names_.size() > kMaxVariables)
        throw std::invalid_argument("at most 64 variables are supported");
    std::set<std::string> seen;
    for (const auto& name : names_) {
        if (name.empty()) throw std::invalid_argument("empty variable name");
        if (!seen.insert(name).second)
            throw std::invalid_argument("duplicate variable name '" + name + "'");
    }
    if (characteristic_ != 0 && !is_prime_number(characteristic_))
        throw std::invalid_argument("characteristic must be 0 or a prime");
}

RingPtr Ring::standard(std::size_t n, std::uint32_t characteristic) {
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    return std::make_shared<const Ring>(std::move(names), characteristic);
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - names_.begin());
}

bool is_prime_number(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

RingPtr with_characteristic(const RingPtr& ring, std::uint32_t characteristic) {
    if (ring->characteristic() == characteristic) return ring;
    return std::make_shared<const Ring>(ring->names(), characteristic, ring->exponent_cap());
}

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::variable(std::size_t n, std::size_t i, Exponent power) {
    Monomial m = unit(n);
    m.exps_.at(i) = power;
    return m;
}

Monomial Monomial::from_set(std::size_t n, VarSet vars) {
    Monomial m = unit(n);
    for (std::size_t i = 0; i < n; ++i)
        if (vars >> i & 1) m.exps_[i] = 1;
    return m;
}

std::uint64_t Monomial::degree() const {
    return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

VarSet Monomial::support() const {
    VarSet s = 0;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > 0) s |= VarSet{1} << i;
    return s;
}

bool Monomial::is_unit() const {
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::is_squarefree() const {
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e <= 1; });
}

bool Monomial::divides(const Monomial& other) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > other.exps_[i]) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
    if (size() != other.size()) throw AmbientMismatch("monomials over different rings");
    Monomial r = *this;
    for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += other.exps_[i];
    return r;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
    if (size() != divisor.size()) throw AmbientMismatch("monomials over different rings");
    if (!divisor.divides(*this)) throw std::invalid_argument("inexact monomial division");
    Monomial r = *this;
    for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= divisor.exps_[i];
    return r;
}

bool grlex_less(const Monomial& a, const Monomial& b) {
    auto da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.exponents() > b.exponents();
}

Monomial lcm(const Monomial& u, const Monomial& v) {
    if (u.size() != v.size()) throw AmbientMismatch("lcm of monomials over different rings");
    Monomial r = u;
    for (std::size_t i = 0; i < u.size(); ++i) r[i] = std::max(u[i], v[i]);
    return r;
}

Monomial gcd(const Monomial& u, const Monomial& v) {
    if (u.size() != v.size()) throw AmbientMismatch("gcd of monomials over different rings");
    Monomial r = u;
    for (std::size_t i = 0; i < u.size(); ++i) r[i] = std::min(u[i], v[i]);
    return r;
}

VarSet support(const Monomial& u) { return u.support(); }

Monomial squarefree_part(const Monomial& u) { return Monomial::from_set(u.size(), u.support()); }

bool strictly_divides(const Monomial& t, const Monomial& m) {
    if (t.size() != m.size()) throw AmbientMismatch("monomials over different rings");
    if (!t.divides(m)) throw std::invalid_argument("strictly_divides: t does not divide m");
    return (m / t).support() == m.support();
}

std::strong_ordering MonomialPrime::operator<=>(const MonomialPrime& other) const {
    if (auto c = height() <=> other.height(); c != 0) return c;
    // Lexicographic on sorted index lists: the set holding the smallest
    // differing index comes first.
    VarSet diff = vars ^ other.vars;
    if (diff == 0) return std::strong_ordering::equal;
    VarSet low = diff & (~diff + 1);
    return (vars & low) ? std::strong_ordering::less : std::strong_ordering::greater;
}

// ---------------------------------------------------------------------------
// MonomialIdeal

namespace {

std::vector<Monomial> minimize(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), grlex_less);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> kept;
    kept.reserve(gens.size());
    for (auto& g : gens) {
        bool redundant = std::any_of(kept.begin(), kept.end(),
                                     [&](const Monomial& k) { return k.divides(g); });
        if (!redundant) kept.push_back(std::move(g));
    }
    return kept;
}

} // namespace

MonomialIdeal::MonomialIdeal(RingPtr ring, std::vector<Monomial> generators) : ring_(std::move(ring)) {
    if (!ring_) throw std::invalid_argument("ideal without ring");
    for (const auto& g : generators) {
        if (g.size() != ring_->size())
            throw AmbientMismatch("generator length does not match the ring");
        for (std::size_t i = 0; i < g.size(); ++i)
            if (g[i] > ring_->exponent_cap())
                throw std::invalid_argument("exponent " + std::to_string(g[i]) +
                                            " exceeds the configured cap " +
                                            std::to_string(ring_->exponent_cap()));
    }
    gens_ = minimize(std::move(generators));
}

MonomialIdeal MonomialIdeal::unit(RingPtr ring) {
    auto n = ring->size();
    return MonomialIdeal(std::move(ring), {Monomial::unit(n)});
}

MonomialIdeal MonomialIdeal::from_prime(RingPtr ring, const MonomialPrime& p) {
    auto n = ring->size();
    std::vector<Monomial> gens;
    for (std::size_t i = 0; i < n; ++i)
        if (p.vars >> i & 1) gens.push_back(Monomial::variable(n, i));
    return MonomialIdeal(std::move(ring), std::move(gens));
}

MonomialIdeal MonomialIdeal::from_sets(RingPtr ring, const std::vector<VarSet>& sets) {
    auto n = ring->size();
    std::vector<Monomial> gens;
    gens.reserve(sets.size());
    for (VarSet s : sets) gens.push_back(Monomial::from_set(n, s));
    return MonomialIdeal(std::move(ring), std::move(gens));
}

bool MonomialIdeal::is_squarefree() const {
    return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.is_squarefree(); });
}

bool MonomialIdeal::is_prime() const {
    return !gens_.empty() &&
           std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.degree() == 1; });
}

std::optional<MonomialPrime> MonomialIdeal::as_prime() const {
    if (!is_prime()) return std::nullopt;
    MonomialPrime p;
    for (const auto& g : gens_) p.vars |= g.support();
    return p;
}

bool MonomialIdeal::contains(const Monomial& u) const {
    return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(u); });
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
    require_same_ring(*this, other);
    return std::all_of(other.gens_.begin(), other.gens_.end(),
                       [&](const Monomial& g) { return contains(g); });
}

Monomial MonomialIdeal::lcm_of_generators() const {
    Monomial r = Monomial::unit(nvars());
    for (const auto& g : gens_) r = lcm(r, g);
    return r;
}

std::uint64_t MonomialIdeal::min_degree() const {
    return gens_.empty() ? 0 : gens_.front().degree();
}

std::uint64_t MonomialIdeal::max_degree() const {
    return gens_.empty() ? 0 : gens_.back().degree();
}

std::vector<VarSet> MonomialIdeal::supports() const {
    std::vector<VarSet> out;
    out.reserve(gens_.size());
    for (const auto& g : gens_) out.push_back(g.support());
    return out;
}

void MonomialIdeal::require_proper_nonzero(const char* operation) const {
    if (is_zero()) throw DegenerateInput(std::string(operation) + ": zero ideal");
    if (is_unit()) throw DegenerateInput(std::string(operation) + ": unit ideal");
}

void MonomialIdeal::require_squarefree(const char* operation) const {
    if (!is_squarefree()) throw NotSquarefree(std::string(operation) + ": ideal is not squarefree");
}

bool MonomialIdeal::operator==(const MonomialIdeal& other) const {
    return (ring_ == other.ring_ || *ring_ == *other.ring_) && gens_ == other.gens_;
}

void require_same_ring(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.ring() == b.ring()) return;
    if (a.ring()->names() != b.ring()->names())
        throw AmbientMismatch("ideals over different rings");
}

bool contains(const MonomialIdeal& ideal, const Monomial& u) { return ideal.contains(u); }

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& u) {
    if (u.size() != ideal.nvars()) throw AmbientMismatch("colon by a monomial of another ring");
    std::vector<Monomial> gens;
    gens.reserve(ideal.size());
    for (const auto& g : ideal.gens()) gens.push_back(g / gcd(g, u));
    return MonomialIdeal(ideal.ring(), std::move(gens));
}

MonomialIdeal radical(const MonomialIdeal& ideal) {
    std::vector<Monomial> gens;
    gens.reserve(ideal.size());
    for (const auto& g : ideal.gens()) gens.push_back(squarefree_part(g));
    return MonomialIdeal(ideal.ring(), std::move(gens));
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
    require_same_ring(a, b);
    std::vector<Monomial> gens;
    gens.reserve(a.size() * b.size());
    for (const auto& u : a.gens())
        for (const auto& v : b.gens()) gens.push_back(lcm(u, v));
    return MonomialIdeal(a.ring(), std::move(gens));
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
    require_same_ring(a, b);
    std::vector<Monomial> gens = a.gens();
    gens.insert(gens.end(), b.gens().begin(), b.gens().end());
    return MonomialIdeal(a.ring(), std::move(gens));
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
    require_same_ring(a, b);
    std::vector<Monomial> gens;
    gens.reserve(a.size() * b.size());
    for (const auto& u : a.gens())
        for (const auto& v : b.gens()) gens.push_back(u * v);
    return MonomialIdeal(a.ring(), std::move(gens));
}

MonomialIdeal adjoin(const MonomialIdeal& a, const Monomial& u) {
    std::vector<Monomial> gens = a.gens();
    gens.push_back(u);
    return MonomialIdeal(a.ring(), std::move(gens));
}

bool is_generic(const MonomialIdeal& ideal) {
    ideal.require_proper_nonzero("is_generic");
    const auto& g = ideal.gens();
    const std::size_t n = ideal.nvars();
    for (std::size_t i = 0; i < g.size(); ++i) {
        for (std::size_t j = i + 1; j < g.size(); ++j) {
            bool shared = false;
            for (std::size_t s = 0; s < n && !shared; ++s) shared = g[i][s] > 0 && g[i][s] == g[j][s];
            if (!shared) continue;
            const Monomial m = lcm(g[i], g[j]);
            bool witnessed = false;
            for (std::size_t t = 0; t < g.size() && !witnessed; ++t) {
                if (t == i || t == j || !g[t].divides(m)) continue;
                witnessed = strictly_divides(g[t], m);
            }
            if (!witnessed) return false;
        }
    }
    return true;
}

MonomialIdeal with_characteristic(const MonomialIdeal& ideal, std::uint32_t characteristic) {
    return MonomialIdeal(with_characteristic(ideal.ring(), characteristic), ideal.gens());
}

std::string to_string(const Monomial& u, const Ring& ring) {
    std::string out;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += ring.name(i);
        if (u[i] > 1) out += '^' + std::to_string(u[i]);
    }
    return out.empty() ? "1" : out;
}

std::string to_string(const MonomialIdeal& ideal) {
    if (ideal.is_zero()) return "0";
    std::string out;
    for (const auto& g : ideal.gens()) {
        if (!out.empty()) out += ", ";
        out += to_string(g, *ideal.ring());
    }
    return out;
}

std::string to_string(const MonomialPrime& p, const Ring& ring) {
    std::string out = "(";
    bool first = true;
    for (std::size_t i = 0; i < ring.size(); ++i) {
        if (!(p.vars >> i & 1)) continue;
        if (!first) out += ", ";
        out += ring.name(i);
        first = false;
    }
    return out + ")";
}

} // namespace monomideal
