#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "monomideal/errors.hpp"

namespace monomideal {

using Exponent = std::uint32_t;

/// Bit i set <=> variable i (0-based) is present.
using VarSet = std::uint64_t;

inline constexpr std::size_t kMaxVariables = 64;
inline constexpr Exponent kDefaultExponentCap = Exponent{1} << 16;

inline int popcount(VarSet s) { return std::popcount(s); }
inline bool is_subset(VarSet a, VarSet b) { return (a & ~b) == 0; }

/// Polynomial ring K[x1..xn]: variable labels, the characteristic of K,
/// and the largest exponent accepted from user input.
class Ring {
public:
    explicit Ring(std::vector<std::string> names, std::uint32_t characteristic = 0,
                  Exponent exponent_cap = kDefaultExponentCap);

    /// Ring on x1..xn.
    static std::shared_ptr<const Ring> standard(std::size_t n, std::uint32_t characteristic = 0);

    std::size_t size() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(std::size_t i) const { return names_[i]; }
    std::uint32_t characteristic() const { return characteristic_; }
    Exponent exponent_cap() const { return exponent_cap_; }
    std::optional<std::size_t> index_of(std::string_view name) const;

    bool operator==(const Ring& other) const {
        return characteristic_ == other.characteristic_ && names_ == other.names_;
    }

private:
    std::vector<std::string> names_;
    std::uint32_t characteristic_;
    Exponent exponent_cap_;
};

using RingPtr = std::shared_ptr<const Ring>;

bool is_prime_number(std::uint64_t p);

/// Same variables as `ring`, different characteristic.
RingPtr with_characteristic(const RingPtr& ring, std::uint32_t characteristic);

class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<Exponent> exponents) : exps_(std::move(exponents)) {}

    static Monomial unit(std::size_t n) { return Monomial(std::vector<Exponent>(n, 0)); }
    static Monomial variable(std::size_t n, std::size_t i, Exponent power = 1);
    /// Squarefree monomial x_S.
    static Monomial from_set(std::size_t n, VarSet vars);

    std::size_t size() const { return exps_.size(); }
    Exponent operator[](std::size_t i) const { return exps_[i]; }
    Exponent& operator[](std::size_t i) { return exps_[i]; }
    const std::vector<Exponent>& exponents() const { return exps_; }

    std::uint64_t degree() const;
    VarSet support() const;
    bool is_unit() const;
    bool is_squarefree() const;
    /// True iff the support is a single variable.
    bool is_pure_power() const { return popcount(support()) == 1; }

    /// this | other
    bool divides(const Monomial& other) const;

    Monomial operator*(const Monomial& other) const;
    /// Exact quotient; requires divisor | *this.
    Monomial operator/(const Monomial& divisor) const;

    auto operator<=>(const Monomial&) const = default;
    bool operator==(const Monomial&) const = default;

private:
    std::vector<Exponent> exps_;
};

/// Graded order: lower total degree first, ties broken lexicographically
/// with x1 > x2 > ... (so x1 precedes x2).
bool grlex_less(const Monomial& a, const Monomial& b);

Monomial lcm(const Monomial& u, const Monomial& v);
Monomial gcd(const Monomial& u, const Monomial& v);
VarSet support(const Monomial& u);
/// Clamp every exponent to at most 1.
Monomial squarefree_part(const Monomial& u);

/// t strictly divides m: t | m and supp(m / t) = supp(m). Throws if t does not divide m.
bool strictly_divides(const Monomial& t, const Monomial& m);

/// Monomial prime (x_i : i in vars). The empty set stands for the zero ideal.
struct MonomialPrime {
    VarSet vars = 0;

    int height() const { return popcount(vars); }
    bool contains(const MonomialPrime& other) const { return is_subset(other.vars, vars); }
    bool strictly_contains(const MonomialPrime& other) const {
        return vars != other.vars && contains(other);
    }

    bool operator==(const MonomialPrime&) const = default;
    /// Canonical order: by height, then by the sorted list of variable indices.
    std::strong_ordering operator<=>(const MonomialPrime& other) const;
};

/// Monomial ideal stored by its minimal generating set in graded-lex order.
class MonomialIdeal {
public:
    MonomialIdeal() = default;
    /// Minimizes `generators`. Rejects wrong lengths and exponents above the ring's cap.
    MonomialIdeal(RingPtr ring, std::vector<Monomial> generators);

    static MonomialIdeal zero(RingPtr ring) { return MonomialIdeal(std::move(ring), {}); }
    static MonomialIdeal unit(RingPtr ring);
    static MonomialIdeal from_prime(RingPtr ring, const MonomialPrime& p);
    /// Ideal generated by the squarefree monomials x_S for S in `sets`.
    static MonomialIdeal from_sets(RingPtr ring, const std::vector<VarSet>& sets);

    const RingPtr& ring() const { return ring_; }
    std::size_t nvars() const { return ring_->size(); }
    const std::vector<Monomial>& gens() const { return gens_; }
    std::size_t size() const { return gens_.size(); }

    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_.front().is_unit(); }
    bool is_proper() const { return !is_unit(); }
    bool is_squarefree() const;
    /// Generated by variables (and nonzero).
    bool is_prime() const;
    std::optional<MonomialPrime> as_prime() const;

    bool contains(const Monomial& u) const;
    bool contains(const MonomialIdeal& other) const;

    /// lcm of all generators.
    Monomial lcm_of_generators() const;
    std::uint64_t min_degree() const;
    std::uint64_t max_degree() const;
    /// Supports of the generators (meaningful for squarefree ideals).
    std::vector<VarSet> supports() const;

    /// Throws DegenerateInput for the zero or unit ideal.
    void require_proper_nonzero(const char* operation) const;
    void require_squarefree(const char* operation) const;

    bool operator==(const MonomialIdeal& other) const;

private:
    RingPtr ring_;
    std::vector<Monomial> gens_;
};

void require_same_ring(const MonomialIdeal& a, const MonomialIdeal& b);

bool contains(const MonomialIdeal& ideal, const Monomial& u);
MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& u);
MonomialIdeal radical(const MonomialIdeal& ideal);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
/// a + (u)
MonomialIdeal adjoin(const MonomialIdeal& a, const Monomial& u);

/// Every pair of distinct minimal generators with a common positive degree
/// in some variable admits a third generator strictly dividing their lcm.
bool is_generic(const MonomialIdeal& ideal);

/// Copy of `ideal` over the same variables with another characteristic.
MonomialIdeal with_characteristic(const MonomialIdeal& ideal, std::uint32_t characteristic);

std::string to_string(const Monomial& u, const Ring& ring);
std::string to_string(const MonomialIdeal& ideal);
std::string to_string(const MonomialPrime& p, const Ring& ring);

} // namespace monomideal
