#include "monomideal/simplicial.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "monomideal/decomposition.hpp"
#include "monomideal/linalg.hpp"

namespace monomideal {

namespace {

std::vector<Face> maximal_sets(std::vector<Face> sets) {
    std::sort(sets.begin(), sets.end(), [](Face a, Face b) {
        if (popcount(a) != popcount(b)) return popcount(a) > popcount(b);
        return a < b;
    });
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<Face> kept;
    for (Face s : sets) {
        bool covered = std::any_of(kept.begin(), kept.end(), [&](Face k) { return is_subset(s, k); });
        if (!covered) kept.push_back(s);
    }
    return kept;
}

std::vector<VarSet> minimal_sets(std::vector<VarSet> sets) {
    std::sort(sets.begin(), sets.end(), [](VarSet a, VarSet b) {
        if (popcount(a) != popcount(b)) return popcount(a) < popcount(b);
        return a < b;
    });
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<VarSet> kept;
    for (VarSet s : sets) {
        bool covers = std::any_of(kept.begin(), kept.end(), [&](VarSet k) { return is_subset(k, s); });
        if (!covers) kept.push_back(s);
    }
    return kept;
}

template <class Fn>
void for_each_subset(Face f, Fn&& fn) {
    for (Face s = f;; s = (s - 1) & f) {
        fn(s);
        if (s == 0) break;
    }
}

/// Sorted vertex indices of a face.
std::vector<int> vertices_of(Face f) {
    std::vector<int> out;
    while (f) {
        out.push_back(std::countr_zero(f));
        f &= f - 1;
    }
    return out;
}

} // namespace

bool facet_order_less(Face a, Face b) {
    if (popcount(a) != popcount(b)) return popcount(a) > popcount(b);
    Face diff = a ^ b;
    if (diff == 0) return false;
    return (a & diff & (~diff + 1)) != 0;
}

SimplicialComplex::SimplicialComplex(std::size_t n, std::vector<Face> generators) : n_(n) {
    if (n > kMaxVariables) throw std::invalid_argument("at most 64 vertices are supported");
    for (Face f : generators)
        if (!is_subset(f, vertex_set())) throw std::invalid_argument("face uses a vertex outside the vertex set");
    facets_ = maximal_sets(std::move(generators));
    std::sort(facets_.begin(), facets_.end(), facet_order_less);
}

SimplicialComplex SimplicialComplex::simplex(std::size_t n) {
    SimplicialComplex c(n, {});
    c.facets_ = {c.vertex_set()};
    return c;
}

bool SimplicialComplex::contains(Face f) const {
    return std::any_of(facets_.begin(), facets_.end(), [&](Face g) { return is_subset(f, g); });
}

int SimplicialComplex::dim() const {
    if (is_void()) throw DegenerateInput("dimension of the void complex");
    return popcount(facets_.front()) - 1;
}

bool SimplicialComplex::is_pure() const {
    if (is_void()) return true;
    const int d = popcount(facets_.front());
    return std::all_of(facets_.begin(), facets_.end(), [&](Face f) { return popcount(f) == d; });
}

std::vector<std::vector<Face>> SimplicialComplex::faces_by_dim() const {
    if (is_void()) return {};
    std::unordered_set<Face> all;
    for (Face f : facets_) for_each_subset(f, [&](Face s) { all.insert(s); });
    std::vector<std::vector<Face>> out(static_cast<std::size_t>(dim() + 2));
    for (Face f : all) out[static_cast<std::size_t>(popcount(f))].push_back(f);
    for (auto& level : out) std::sort(level.begin(), level.end());
    return out;
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
    std::vector<std::size_t> out;
    for (const auto& level : faces_by_dim()) out.push_back(level.size());
    return out;
}

std::vector<VarSet> minimal_transversals(const std::vector<VarSet>& sets) {
    std::vector<VarSet> current{0};
    for (VarSet e : sets) {
        if (e == 0) return {};
        std::vector<VarSet> next;
        for (VarSet t : current) {
            if (t & e) {
                next.push_back(t);
                continue;
            }
            for (VarSet rest = e; rest; rest &= rest - 1) next.push_back(t | (rest & (~rest + 1)));
        }
        current = minimal_sets(std::move(next));
    }
    return current;
}

SimplicialComplex complex_of_ideal(const MonomialIdeal& ideal) {
    ideal.require_squarefree("complex_of_ideal");
    const std::size_t n = ideal.nvars();
    if (ideal.is_zero()) return SimplicialComplex::simplex(n);
    const VarSet all = SimplicialComplex(n, {}).vertex_set();
    std::vector<Face> facets;
    for (VarSet t : minimal_transversals(ideal.supports())) facets.push_back(all & ~t);
    return SimplicialComplex(n, std::move(facets));
}

std::vector<Face> minimal_nonfaces(const SimplicialComplex& complex) {
    if (complex.is_void()) return {Face{0}};
    std::vector<VarSet> complements;
    for (Face f : complex.facets()) complements.push_back(complex.vertex_set() & ~f);
    return minimal_transversals(complements);
}

MonomialIdeal ideal_of_complex(const SimplicialComplex& complex, const RingPtr& ring) {
    if (ring->size() != complex.nvertices()) throw AmbientMismatch("ring and complex sizes differ");
    return MonomialIdeal::from_sets(ring, minimal_nonfaces(complex));
}

SimplicialComplex alexander_dual(const SimplicialComplex& complex) {
    std::vector<Face> facets;
    for (Face a : minimal_nonfaces(complex)) facets.push_back(complex.vertex_set() & ~a);
    return SimplicialComplex(complex.nvertices(), std::move(facets));
}

MonomialIdeal alexander_dual_ideal(const MonomialIdeal& ideal) {
    ideal.require_squarefree("alexander_dual_ideal");
    ideal.require_proper_nonzero("alexander_dual_ideal");
    std::vector<VarSet> sets;
    for (const auto& p : minimal_primes(ideal)) sets.push_back(p.vars);
    return MonomialIdeal::from_sets(ideal.ring(), sets);
}

SimplicialComplex skeleton(const SimplicialComplex& complex, int i) {
    if (complex.is_void()) throw DegenerateInput("skeleton of the void complex");
    if (i < -1 || i > complex.dim()) throw std::out_of_range("skeleton dimension out of range");
    std::vector<Face> faces;
    for (Face f : complex.facets()) {
        if (popcount(f) < i + 1) continue;
        for_each_subset(f, [&](Face s) {
            if (popcount(s) == i + 1) faces.push_back(s);
        });
    }
    return SimplicialComplex(complex.nvertices(), std::move(faces));
}

SimplicialComplex induced(const SimplicialComplex& complex, VarSet subset) {
    std::vector<Face> faces;
    for (Face f : complex.facets()) faces.push_back(f & subset);
    return SimplicialComplex(complex.nvertices(), std::move(faces));
}

SimplicialComplex link(const SimplicialComplex& complex, Face face) {
    if (!complex.contains(face)) throw std::invalid_argument("link: not a face of the complex");
    std::vector<Face> faces;
    for (Face f : complex.facets())
        if (is_subset(face, f)) faces.push_back(f & ~face);
    return SimplicialComplex(complex.nvertices(), std::move(faces));
}

bool is_connected(const SimplicialComplex& complex) {
    if (complex.is_void()) throw DegenerateInput("is_connected: void complex");
    const auto& facets = complex.facets();
    std::vector<std::size_t> parent(facets.size());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < facets.size(); ++i)
        for (std::size_t j = i + 1; j < facets.size(); ++j)
            if (facets[i] & facets[j]) parent[find(i)] = find(j);
    std::size_t roots = 0;
    for (std::size_t i = 0; i < facets.size(); ++i) roots += find(i) == i;
    return roots == 1;
}

bool HomologyProfile::vanishes_below(int bound) const {
    return std::all_of(ranks.begin(), ranks.end(),
                       [&](const auto& kv) { return kv.first >= bound || kv.second == 0; });
}

HomologyProfile reduced_homology(const SimplicialComplex& complex, std::uint32_t characteristic) {
    if (complex.is_void()) return {};
    const auto faces = complex.faces_by_dim();
    const int d = complex.dim();

    // boundary_rank[k + 1] = rank of ∂_k : C_k -> C_{k-1}, k = 0..d.
    std::vector<std::size_t> boundary_rank(static_cast<std::size_t>(d + 3), 0);
    for (int k = 0; k <= d; ++k) {
        const auto& cols = faces[static_cast<std::size_t>(k + 1)];
        const auto& rows = faces[static_cast<std::size_t>(k)];
        std::unordered_map<Face, std::size_t> row_index;
        row_index.reserve(rows.size());
        for (std::size_t r = 0; r < rows.size(); ++r) row_index.emplace(rows[r], r);
        linalg::IntMatrix m(rows.size(), std::vector<std::int64_t>(cols.size(), 0));
        for (std::size_t c = 0; c < cols.size(); ++c) {
            const auto verts = vertices_of(cols[c]);
            for (std::size_t j = 0; j < verts.size(); ++j) {
                const Face boundary = cols[c] & ~(Face{1} << verts[j]);
                m[row_index.at(boundary)][c] = (j % 2 == 0) ? 1 : -1;
            }
        }
        boundary_rank[static_cast<std::size_t>(k + 1)] = linalg::rank(std::move(m), characteristic);
    }

    HomologyProfile h;
    for (int k = -1; k <= d; ++k) {
        const std::size_t fk = faces[static_cast<std::size_t>(k + 1)].size();
        const std::size_t out = boundary_rank[static_cast<std::size_t>(k + 1)];
        const std::size_t in = boundary_rank[static_cast<std::size_t>(k + 2)];
        if (fk != out + in) h.ranks[k] = fk - out - in;
    }
    return h;
}

namespace {

class ShellingSearch {
public:
    ShellingSearch(const std::vector<Face>& facets, const Deadline& deadline)
        : facets_(facets), deadline_(deadline), words_((facets.size() + 63) / 64) {}

    bool run(std::vector<Face>& order) {
        std::vector<std::uint64_t> used(words_, 0);
        std::vector<std::size_t> chosen;
        if (!extend(used, chosen)) return false;
        for (auto i : chosen) order.push_back(facets_[i]);
        return true;
    }

private:
    struct KeyHash {
        std::size_t operator()(const std::vector<std::uint64_t>& key) const {
            std::size_t h = 0x9e3779b97f4a7c15ull;
            for (auto w : key) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
            return h;
        }
    };

    static bool test(const std::vector<std::uint64_t>& used, std::size_t i) {
        return used[i / 64] >> (i % 64) & 1;
    }

    bool attaches(const std::vector<std::size_t>& chosen, Face f) const {
        Face codim_one = 0;
        for (auto j : chosen) {
            const Face missing = f & ~facets_[j];
            if (popcount(missing) == 1) codim_one |= missing;
        }
        return std::all_of(chosen.begin(), chosen.end(),
                           [&](std::size_t j) { return (f & ~facets_[j] & codim_one) != 0; });
    }

    bool extend(std::vector<std::uint64_t>& used, std::vector<std::size_t>& chosen) {
        if (chosen.size() == facets_.size()) return true;
        if (++nodes_ % 512 == 0) deadline_.check("shellability search");
        if (failed_.contains(used)) return false;

        // Only facets of the largest remaining dimension are eligible.
        std::size_t first = 0;
        while (test(used, first)) ++first;
        const int size = popcount(facets_[first]);
        for (std::size_t i = first; i < facets_.size() && popcount(facets_[i]) == size; ++i) {
            if (test(used, i)) continue;
            if (!chosen.empty() && !attaches(chosen, facets_[i])) continue;
            used[i / 64] |= std::uint64_t{1} << (i % 64);
            chosen.push_back(i);
            if (extend(used, chosen)) return true;
            chosen.pop_back();
            used[i / 64] &= ~(std::uint64_t{1} << (i % 64));
        }
        failed_.insert(used);
        return false;
    }

    const std::vector<Face>& facets_;
    const Deadline& deadline_;
    std::size_t words_;
    std::size_t nodes_ = 0;
    std::unordered_set<std::vector<std::uint64_t>, KeyHash> failed_;
};

} // namespace

ShellingResult find_shelling(const SimplicialComplex& complex, const Deadline& deadline) {
    if (complex.is_void() || complex.is_irrelevant())
        throw DegenerateInput("shellability of a degenerate complex");
    ShellingResult result;
    ShellingSearch search(complex.facets(), deadline);
    result.shellable = search.run(result.order);
    return result;
}

bool is_shellable(const SimplicialComplex& complex, const Deadline& deadline) {
    return find_shelling(complex, deadline).shellable;
}

bool is_shelling_order(const SimplicialComplex& complex, const std::vector<Face>& order) {
    std::vector<Face> sorted = order;
    std::sort(sorted.begin(), sorted.end(), facet_order_less);
    if (sorted != complex.facets()) return false;
    for (std::size_t k = 1; k < order.size(); ++k) {
        std::vector<Face> meets;
        for (std::size_t j = 0; j < k; ++j) meets.push_back(order[k] & order[j]);
        for (Face m : maximal_sets(std::move(meets)))
            if (popcount(m) != popcount(order[k]) - 1) return false;
    }
    return true;
}

std::vector<Face> shelling_restrictions(const std::vector<Face>& order) {
    std::vector<Face> out;
    for (std::size_t k = 0; k < order.size(); ++k) {
        Face r = 0;
        for (std::size_t j = 0; j < k; ++j) {
            const Face missing = order[k] & ~order[j];
            if (popcount(missing) == 1) r |= missing;
        }
        out.push_back(r);
    }
    return out;
}

bool reisner_is_cm(const SimplicialComplex& complex, std::uint32_t characteristic) {
    if (complex.is_void()) throw DegenerateInput("reisner_is_cm: void complex");
    for (const auto& level : complex.faces_by_dim()) {
        for (Face f : level) {
            const auto lk = link(complex, f);
            const int d = lk.dim();
            if (d <= 0) continue;  // only H̃_{-1} below dimension 0, which vanishes for nonempty links
            if (!reduced_homology(lk, characteristic).vanishes_below(d)) return false;
        }
    }
    return true;
}

std::string to_string(Face face, const Ring& ring) {
    std::string out = "{";
    bool first = true;
    for (int v : vertices_of(face)) {
        if (!first) out += ",";
        out += ring.name(static_cast<std::size_t>(v));
        first = false;
    }
    return out + "}";
}

std::string to_string(const SimplicialComplex& complex, const Ring& ring) {
    if (complex.is_void()) return "void";
    std::string out;
    for (Face f : complex.facets()) {
        if (!out.empty()) out += ", ";
        out += to_string(f, ring);
    }
    return out;
}

} // namespace monomideal
