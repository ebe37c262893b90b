#pragma once
// Test helpers: compact constructors, seeded random ideals and brute-force
// oracles that share no code with the library algorithms they check.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "monomideal/io.hpp"
#include "monomideal/monomial.hpp"
#include "monomideal/simplicial.hpp"

namespace testing {

using namespace monomideal;

inline RingPtr ring(std::size_t n, std::uint32_t characteristic = 0) {
    return Ring::standard(n, characteristic);
}

inline MonomialIdeal ideal(std::size_t n, const std::string& gens, std::uint32_t characteristic = 0) {
    return parse_ideal(gens, ring(n, characteristic));
}

inline Monomial mono(std::size_t n, const std::string& text) { return parse_monomial(text, *ring(n)); }

inline Face face(std::initializer_list<int> vertices_one_based) {
    Face f = 0;
    for (int v : vertices_one_based) f |= Face{1} << (v - 1);
    return f;
}

inline const MonomialIdeal& terai() {
    static const MonomialIdeal I = ideal(6, "x1*x2*x3, x1*x2*x6, x1*x3*x5, x1*x4*x5, x1*x4*x6, "
                                            "x2*x3*x4, x2*x4*x5, x2*x5*x6, x3*x4*x6, x3*x5*x6");
    return I;
}

inline const MonomialIdeal& eleven() {
    static const MonomialIdeal I =
        ideal(11, "x1*x4, x1*x5, x1*x8, x1*x9, x2*x5, x2*x6, x2*x8, x2*x10, x2*x11, x3*x6, x3*x7, x3*x9, "
                  "x3*x10, x4*x7, x4*x8, x4*x11, x5*x9, x5*x10, x5*x11, x6*x8, x6*x9, x6*x11, x7*x10, "
                  "x7*x11, x9*x11");
    return I;
}

inline const MonomialIdeal& counterexample() {
    static const MonomialIdeal I = ideal(4, "x1^2*x2, x2^2*x3, x1*x4^2, x3^2*x4");
    return I;
}

// ---------------------------------------------------------------------------
// Random inputs

class Generator {
public:
    explicit Generator(std::uint64_t seed) : rng_(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    /// Random proper nonzero ideal; exponents in [0, max_exp], 1..max_gens generators.
    MonomialIdeal ideal(std::size_t n, Exponent max_exp, int max_gens, std::uint32_t characteristic = 0) {
        for (;;) {
            std::vector<Monomial> gens;
            const int count = uniform(1, max_gens);
            for (int k = 0; k < count; ++k) {
                Monomial u = Monomial::unit(n);
                for (std::size_t i = 0; i < n; ++i) u[i] = static_cast<Exponent>(uniform(0, static_cast<int>(max_exp)));
                gens.push_back(std::move(u));
            }
            MonomialIdeal I(ring(n, characteristic), std::move(gens));
            if (!I.is_zero() && !I.is_unit()) return I;
        }
    }

    MonomialIdeal squarefree(std::size_t n, int max_gens, std::uint32_t characteristic = 0) {
        return ideal(n, 1, max_gens, characteristic);
    }

    /// Squarefree ideal whose generators all have degree d.
    MonomialIdeal single_degree(std::size_t n, int d, int max_gens) {
        std::vector<VarSet> all;
        for (VarSet s = 0; s < (VarSet{1} << n); ++s)
            if (popcount(s) == d) all.push_back(s);
        std::shuffle(all.begin(), all.end(), rng_);
        all.resize(static_cast<std::size_t>(uniform(1, std::min<int>(max_gens, static_cast<int>(all.size())))));
        return MonomialIdeal::from_sets(ring(n), all);
    }

    SimplicialComplex complex(std::size_t n, int max_facets) {
        std::vector<Face> gens;
        const int count = uniform(1, max_facets);
        for (int k = 0; k < count; ++k) gens.push_back(static_cast<Face>(uniform(1, (1 << n) - 1)));
        return SimplicialComplex(n, gens);
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

// ---------------------------------------------------------------------------
// Oracles

namespace oracle {

inline bool divides(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline bool member(const std::vector<Monomial>& gens, const Monomial& u) {
    return std::any_of(gens.begin(), gens.end(), [&](const Monomial& g) { return divides(g, u); });
}

/// Every monomial with exponents bounded by `bound`.
inline std::vector<Monomial> box(const std::vector<Exponent>& bound) {
    std::vector<Monomial> out;
    std::vector<Exponent> e(bound.size(), 0);
    for (;;) {
        out.emplace_back(e);
        std::size_t i = 0;
        while (i < e.size() && e[i] == bound[i]) e[i++] = 0;
        if (i == e.size()) break;
        ++e[i];
    }
    return out;
}

inline std::vector<Exponent> lcm_bound(const std::vector<Monomial>& gens, std::size_t n, Exponent slack = 0) {
    std::vector<Exponent> b(n, 0);
    for (const auto& g : gens)
        for (std::size_t i = 0; i < n; ++i) b[i] = std::max(b[i], g[i]);
    for (auto& x : b) x += slack;
    return b;
}

inline Monomial times(const Monomial& a, const Monomial& b) {
    std::vector<Exponent> e(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) e[i] = a[i] + b[i];
    return Monomial(e);
}

/// Minimal elements of a list of monomials.
inline std::vector<Monomial> minimalize(const std::vector<Monomial>& ms) {
    std::vector<Monomial> out;
    for (std::size_t i = 0; i < ms.size(); ++i) {
        bool keep = true;
        for (std::size_t j = 0; j < ms.size() && keep; ++j)
            if (ms[j] != ms[i] && divides(ms[j], ms[i])) keep = false;
            else if (j < i && ms[j] == ms[i]) keep = false;
        if (keep) out.push_back(ms[i]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Generators of (I : u), found among the monomials dividing lcm(G(I)).
inline std::vector<Monomial> colon(const std::vector<Monomial>& gens, const Monomial& u) {
    std::vector<Monomial> hits;
    for (const auto& m : box(lcm_bound(gens, u.size())))
        if (member(gens, times(m, u))) hits.push_back(m);
    return minimalize(hits);
}

inline std::vector<Monomial> sorted(std::vector<Monomial> ms) {
    std::sort(ms.begin(), ms.end());
    return ms;
}

/// Monomial prime equal to (I : u), if any; identified by generators of degree 1.
inline std::optional<VarSet> colon_prime(const std::vector<Monomial>& gens, const Monomial& u) {
    const auto c = colon(gens, u);
    VarSet p = 0;
    for (const auto& m : c) {
        std::uint64_t deg = 0;
        for (auto e : m.exponents()) deg += e;
        if (deg != 1) return std::nullopt;
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i]) p |= VarSet{1} << i;
    }
    if (c.empty()) return std::nullopt;
    return p;
}

/// Ass(I) = {(I : u) prime : u in the lcm box}.
inline std::set<VarSet> associated_primes(const MonomialIdeal& I) {
    std::set<VarSet> out;
    for (const auto& u : box(lcm_bound(I.gens(), I.nvars())))
        if (!member(I.gens(), u))
            if (auto p = colon_prime(I.gens(), u)) out.insert(*p);
    return out;
}

/// All faces of the Stanley–Reisner complex of a squarefree ideal.
inline std::set<Face> faces_of_ideal(const MonomialIdeal& I) {
    std::set<Face> out;
    const auto supports = I.supports();
    for (Face s = 0; s < (Face{1} << I.nvars()); ++s)
        if (std::none_of(supports.begin(), supports.end(), [&](VarSet g) { return (g & ~s) == 0; }))
            out.insert(s);
    return out;
}

inline std::set<Face> faces_of(const SimplicialComplex& c) {
    std::set<Face> out;
    for (Face s = 0; s < (Face{1} << c.nvertices()); ++s)
        for (Face f : c.facets())
            if ((s & ~f) == 0) {
                out.insert(s);
                break;
            }
    return out;
}

inline std::vector<Face> maximal(const std::set<Face>& faces) {
    std::vector<Face> out;
    for (Face f : faces)
        if (std::none_of(faces.begin(), faces.end(), [&](Face g) { return g != f && (f & ~g) == 0; }))
            out.push_back(f);
    return out;
}

/// {V \ A : A not a face}.
inline std::set<Face> dual_faces(const std::set<Face>& faces, std::size_t n) {
    const Face all = (Face{1} << n) - 1;
    std::set<Face> out;
    for (Face a = 0; a <= all; ++a)
        if (!faces.contains(a)) out.insert(all & ~a);
    return out;
}

/// Definition check: every F_k meets <F_1..F_{k-1}> in a pure complex of
/// dimension dim F_k - 1, i.e. each maximal F_k ∩ F_j has |F_k| - 1 elements.
inline bool is_shelling(const std::vector<Face>& order) {
    for (std::size_t k = 1; k < order.size(); ++k) {
        std::set<Face> meets;
        for (std::size_t j = 0; j < k; ++j) meets.insert(order[k] & order[j]);
        for (Face m : maximal(meets))
            if (popcount(m) + 1 != popcount(order[k])) return false;
    }
    return true;
}

/// Shellability by trying every facet permutation (keep facets ≤ 8).
inline bool shellable(const SimplicialComplex& c) {
    std::vector<Face> order = c.facets();
    std::sort(order.begin(), order.end());
    do {
        if (is_shelling(order)) return true;
    } while (std::next_permutation(order.begin(), order.end()));
    return false;
}

/// Linear quotients over every generator permutation (keep generators ≤ 7).
inline bool linear_quotients(const MonomialIdeal& I) {
    std::vector<Monomial> order = sorted(I.gens());
    do {
        bool ok = true;
        for (std::size_t k = 1; k < order.size() && ok; ++k) {
            const std::vector<Monomial> prefix(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k));
            ok = colon_prime(prefix, order[k]).has_value();
        }
        if (ok) return true;
    } while (std::next_permutation(order.begin(), order.end()));
    return false;
}

/// K-polynomial numerator via the Taylor complex: Σ_{∅≠S⊆G} (-1)^{|S|+1} t^{deg lcm S}.
inline std::map<int, std::int64_t> taylor_kpoly(const MonomialIdeal& I) {
    const auto& g = I.gens();
    std::map<int, std::int64_t> out;
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << g.size()); ++s) {
        std::vector<Exponent> l(I.nvars(), 0);
        for (std::size_t k = 0; k < g.size(); ++k)
            if (s >> k & 1)
                for (std::size_t i = 0; i < l.size(); ++i) l[i] = std::max(l[i], g[k][i]);
        const int deg = std::accumulate(l.begin(), l.end(), 0);
        out[deg] += (std::popcount(s) % 2 == 1) ? 1 : -1;
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

} // namespace oracle
} // namespace testing
