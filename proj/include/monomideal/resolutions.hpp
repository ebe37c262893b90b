#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "monomideal/budget.hpp"
#include "monomideal/monomial.hpp"

namespace monomideal {

enum class BettiSubject { Ideal, Quotient };

/// Graded Betti numbers β_{i,j}; absent entries are zero.
struct BettiTable {
    std::map<std::pair<int, int>, std::uint64_t> entries;
    BettiSubject subject = BettiSubject::Ideal;

    std::uint64_t at(int i, int j) const;
    /// Largest homological index with a nonzero entry (-1 if empty).
    int max_index() const;
    /// Table of R/I from the table of I.
    BettiTable quotient() const;

    bool operator==(const BettiTable&) const = default;
};

/// β_{i,j}(I_Δ) = Σ_{|S|=j} dim H̃_{j-i-2}(Δ|_S), over the ring's characteristic.
/// Only subsets in the lcm lattice of the generators contribute.
BettiTable hochster_betti(const MonomialIdeal& ideal);

/// β_{i,b}(I) = dim H̃_{i-1}(K^b) with the upper Koszul complex
/// K^b = {F ⊆ supp b : x^{b-F} ∈ I}, summed over the lcm lattice of G(I).
/// Works for any monomial ideal without polarizing.
BettiTable koszul_betti(const MonomialIdeal& ideal);

/// Betti table of any proper nonzero monomial ideal; non-squarefree input
/// goes through polarization.
BettiTable betti_table(const MonomialIdeal& ideal);

/// max(j - i) over the nonzero β_{i,j}(I).
int regularity(const MonomialIdeal& ideal);
/// Projective dimension of R/I.
int proj_dim(const MonomialIdeal& ideal);
/// depth(R/I) = n - pd(R/I).
int depth_quotient(const MonomialIdeal& ideal);

bool has_linear_resolution(const MonomialIdeal& ideal);

/// I_[j]: all squarefree monomials of degree j lying in I.
MonomialIdeal squarefree_component(const MonomialIdeal& ideal, int j);
/// I_<j>: all monomials of degree j lying in I.
MonomialIdeal degree_component(const MonomialIdeal& ideal, int j);

bool is_componentwise_linear(const MonomialIdeal& ideal);

struct LinearQuotientsResult {
    bool has_linear_quotients = false;
    /// Generator order certificate.
    std::vector<Monomial> order;
};

/// Backtracking over generator orders with incremental colon checks. Orders
/// are restricted to non-decreasing degree, ties in graded-lex order.
LinearQuotientsResult find_linear_quotients(const MonomialIdeal& ideal, const Deadline& deadline = {});
bool has_linear_quotients(const MonomialIdeal& ideal, const Deadline& deadline = {});
/// Recomputes every colon ((u_1..u_{k-1}) : u_k) and checks it is generated by variables.
bool is_linear_quotient_order(const MonomialIdeal& ideal, const std::vector<Monomial>& order);

struct Polarization {
    MonomialIdeal ideal;
    /// origin[k] = (original variable, copy index starting at 1) of new variable k.
    std::vector<std::pair<std::size_t, Exponent>> origin;
};

/// x_i^a -> x_{i,1} x_{i,2} ... x_{i,a} in a ring with one variable per
/// (i, k), k up to the largest x_i-degree among the generators.
Polarization polarize(const MonomialIdeal& ideal);

} // namespace monomideal
