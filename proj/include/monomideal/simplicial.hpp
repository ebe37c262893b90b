#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "monomideal/budget.hpp"
#include "monomideal/monomial.hpp"

namespace monomideal {

/// A face is a vertex subset; vertex i corresponds to ring variable i.
using Face = VarSet;

/// Canonical facet order: larger faces first, then lexicographic on the
/// sorted vertex lists.
bool facet_order_less(Face a, Face b);

/// Simplicial complex on {0..n-1} kept as its facets (pairwise incomparable,
/// canonical order). The void complex has no faces at all; the irrelevant
/// complex {∅} has the single facet ∅.
class SimplicialComplex {
public:
    /// Keeps only the inclusion-maximal members of `generators`. An empty
    /// list gives the void complex.
    SimplicialComplex(std::size_t n, std::vector<Face> generators);

    static SimplicialComplex void_complex(std::size_t n) { return {n, {}}; }
    static SimplicialComplex irrelevant(std::size_t n) { return {n, {Face{0}}}; }
    static SimplicialComplex simplex(std::size_t n);

    std::size_t nvertices() const { return n_; }
    VarSet vertex_set() const { return n_ == 64 ? ~VarSet{0} : (VarSet{1} << n_) - 1; }
    const std::vector<Face>& facets() const { return facets_; }

    bool is_void() const { return facets_.empty(); }
    bool is_irrelevant() const { return facets_.size() == 1 && facets_.front() == 0; }
    bool contains(Face f) const;
    /// -1 for {∅}; throws for the void complex.
    int dim() const;
    bool is_pure() const;

    /// All faces (∅ included), grouped by dimension: result[d + 1] holds the
    /// d-dimensional faces in increasing bit order.
    std::vector<std::vector<Face>> faces_by_dim() const;
    /// f_{-1}, f_0, ..., f_dim.
    std::vector<std::size_t> f_vector() const;

    bool operator==(const SimplicialComplex&) const = default;

private:
    std::size_t n_ = 0;
    std::vector<Face> facets_;
};

/// Inclusion-minimal sets meeting every member of `sets` (Berge's algorithm).
std::vector<VarSet> minimal_transversals(const std::vector<VarSet>& sets);

/// Stanley–Reisner correspondence. Faces are the sets supporting no generator.
SimplicialComplex complex_of_ideal(const MonomialIdeal& ideal);
/// I_Δ, generated by the minimal non-faces.
MonomialIdeal ideal_of_complex(const SimplicialComplex& complex, const RingPtr& ring);
std::vector<Face> minimal_nonfaces(const SimplicialComplex& complex);

/// Δ^∨ = {V \ A : A ∉ Δ}.
SimplicialComplex alexander_dual(const SimplicialComplex& complex);
/// I^∨ generated by the support products of the minimal primes of I.
MonomialIdeal alexander_dual_ideal(const MonomialIdeal& ideal);

/// Pure i-skeleton: the complex generated by all i-dimensional faces.
SimplicialComplex skeleton(const SimplicialComplex& complex, int i);
/// Δ|_S = {F ∈ Δ : F ⊆ S}.
SimplicialComplex induced(const SimplicialComplex& complex, VarSet subset);
SimplicialComplex link(const SimplicialComplex& complex, Face face);

/// Facet-overlap graph is connected.
bool is_connected(const SimplicialComplex& complex);

struct HomologyProfile {
    /// Nonzero ranks: ranks[i] = dim H̃_i; missing keys are zero.
    std::map<int, std::size_t> ranks;

    std::size_t rank(int i) const {
        auto it = ranks.find(i);
        return it == ranks.end() ? 0 : it->second;
    }
    /// H̃_i vanishes for every i < bound.
    bool vanishes_below(int bound) const;
};

/// Reduced simplicial homology over Q (characteristic 0) or GF(p), with
/// H̃_{-1}({∅}) = K. The void complex has zero homology.
HomologyProfile reduced_homology(const SimplicialComplex& complex, std::uint32_t characteristic);

struct ShellingResult {
    bool shellable = false;
    /// Shelling order certificate when shellable.
    std::vector<Face> order;
};

/// Exhaustive search for a (possibly non-pure) shelling. Candidate facets are
/// tried by decreasing dimension, then canonical order; failed prefixes are
/// memoized by their facet set. Throws BudgetExceeded when `deadline` passes.
ShellingResult find_shelling(const SimplicialComplex& complex, const Deadline& deadline = {});
bool is_shellable(const SimplicialComplex& complex, const Deadline& deadline = {});

/// Checks directly that each facet meets the complex generated by its
/// predecessors in a pure complex of codimension one in the facet, and that
/// `order` lists every facet exactly once.
bool is_shelling_order(const SimplicialComplex& complex, const std::vector<Face>& order);

/// Restriction faces of a shelling: for each F_k, the vertices v with
/// F_k \ {v} in <F_1, ..., F_{k-1}>. The first facet has restriction ∅.
std::vector<Face> shelling_restrictions(const std::vector<Face>& order);

/// Reisner's criterion: all links have vanishing reduced homology below
/// their dimension.
bool reisner_is_cm(const SimplicialComplex& complex, std::uint32_t characteristic);

std::string to_string(Face face, const Ring& ring);
std::string to_string(const SimplicialComplex& complex, const Ring& ring);

} // namespace monomideal
