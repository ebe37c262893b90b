#pragma once

#include <vector>

#include "monomideal/monomial.hpp"

namespace monomideal {

/// Irreducible monomial ideal (x_i^{a_i} : a_i > 0). Stored as the exponent
/// vector a, with 0 marking an absent variable.
class IrreducibleComponent {
public:
    explicit IrreducibleComponent(Monomial powers);

    const Monomial& powers() const { return powers_; }
    MonomialPrime radical() const { return {powers_.support()}; }
    bool contains(const Monomial& u) const;
    /// this ⊆ other
    bool is_contained_in(const IrreducibleComponent& other) const;
    MonomialIdeal to_ideal(const RingPtr& ring) const;

    auto operator<=>(const IrreducibleComponent&) const = default;

private:
    Monomial powers_;
};

/// Irredundant irreducible decomposition I = Q_1 ∩ ... ∩ Q_r in canonical order.
struct Decomposition {
    std::vector<IrreducibleComponent> components;

    bool contains(const Monomial& u) const;
    MonomialIdeal intersection(const RingPtr& ring) const;
};

Decomposition irreducible_decomposition(const MonomialIdeal& ideal);

/// True iff removing any component strictly enlarges the intersection.
bool is_irredundant(const Decomposition& d, const RingPtr& ring);

std::vector<MonomialPrime> associated_primes(const MonomialIdeal& ideal);
std::vector<MonomialPrime> minimal_primes(const MonomialIdeal& ideal);
/// Inclusion-minimal members of `primes`, canonical order.
std::vector<MonomialPrime> minimal_elements(std::vector<MonomialPrime> primes);

int height(const MonomialIdeal& ideal);
int dim_quotient(const MonomialIdeal& ideal);

/// No embedded primes: Ass(I) = Min(I).
bool satisfies_S1(const MonomialIdeal& ideal);

} // namespace monomideal
