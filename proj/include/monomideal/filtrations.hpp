#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "monomideal/budget.hpp"
#include "monomideal/monomial.hpp"
#include "monomideal/simplicial.hpp"

namespace monomideal {

/// I_i = (I_{i-1}, u) with (I_{i-1} : u) = p.
struct PrimeFiltrationStep {
    Monomial u;
    MonomialPrime p;

    bool operator==(const PrimeFiltrationStep&) const = default;
};

/// Monomial prime filtration I = I_0 ⊂ I_1 ⊂ ... ⊂ I_r = R.
struct PrimeFiltration {
    MonomialIdeal base;
    std::vector<PrimeFiltrationStep> steps;
};

enum class FiltrationMode { Any, Clean, Pretty, Almost };

const char* to_string(FiltrationMode mode);

/// Backtracking search over monomials dividing `bound` (default: lcm of the
/// generators), in graded-lex order. Returns the first certificate found, or
/// nullopt when the bounded search space is exhausted. Throws BudgetExceeded.
std::optional<PrimeFiltration> find_prime_filtration(const MonomialIdeal& ideal, FiltrationMode mode,
                                                     std::optional<Monomial> bound = std::nullopt,
                                                     const Deadline& deadline = {});

/// Recomputes every colon and checks the chain ends at R.
bool replay(const PrimeFiltration& filtration);

/// Distinct step primes, canonical order.
std::vector<MonomialPrime> supp_of_filtration(const PrimeFiltration& filtration);

/// Checks the mode constraint on an already replayed filtration.
bool satisfies_mode(const PrimeFiltration& filtration, FiltrationMode mode);

/// Clean filtration of I_Δ read off a shelling F_1..F_t: the steps adjoin
/// x_{R(F_t)}, ..., x_{R(F_1)} = 1 with primes generated by V \ F_k.
PrimeFiltration filtration_from_shelling(const MonomialIdeal& ideal, const std::vector<Face>& shelling);

// ---------------------------------------------------------------------------
// Verdicts

enum class Truth { False, True, Undecided };

const char* to_string(Truth t);

struct ShellingOrder {
    std::vector<Face> facets;
};

struct GeneratorOrder {
    std::vector<Monomial> gens;
};

using Certificate = std::variant<PrimeFiltration, ShellingOrder, GeneratorOrder>;

struct Verdict {
    Truth value = Truth::Undecided;
    /// Which decision route produced the value.
    std::string route;
    std::optional<Certificate> certificate;

    bool is_true() const { return value == Truth::True; }
    bool is_false() const { return value == Truth::False; }
    bool decided() const { return value != Truth::Undecided; }
};

inline Truth truth(bool b) { return b ? Truth::True : Truth::False; }

struct DecisionOptions {
    /// Deadline for the exhaustive searches (shellability, linear quotients).
    Deadline deadline;
    /// Attach filtration certificates to positive cleanness verdicts.
    bool want_certificate = false;
    /// Exponent box for direct filtration search; defaults to the lcm of the generators.
    std::optional<Monomial> search_bound;
    /// Seconds allowed for a direct filtration search that no theorem route backs up.
    double filtration_search_seconds = 10.0;
};

/// Clean. Squarefree: shellability of the Stanley–Reisner complex. Otherwise
/// embedded primes refute; generic ideals are clean iff Ass = Min; else clean
/// iff pretty clean (Ass = Min forces Supp = Min).
Verdict is_clean(const MonomialIdeal& ideal, const DecisionOptions& options = {});

/// Pretty clean. Squarefree: same as clean. Otherwise cleanness of the
/// polarization; generic ideals are also decided through sequential
/// Cohen–Macaulayness and both answers must agree.
Verdict is_pretty_clean(const MonomialIdeal& ideal, const DecisionOptions& options = {});

/// Almost clean. Bounded search for a filtration with Supp = Ass, backed by
/// the generic and pretty clean routes; may be undecided.
Verdict is_almost_clean(const MonomialIdeal& ideal, const DecisionOptions& options = {});

} // namespace monomideal
