#pragma once

#include <string>
#include <utility>
#include <vector>

#include "monomideal/filtrations.hpp"
#include "monomideal/monomial.hpp"

namespace monomideal {

/// Cohen–Macaulay over the ring's characteristic. Squarefree ideals are
/// decided twice, by Reisner's criterion and by linearity of the Alexander
/// dual's resolution; disagreement throws InconsistencyError.
Verdict is_cm(const MonomialIdeal& ideal, const DecisionOptions& options = {});

/// Sequentially Cohen–Macaulay: the Alexander dual is componentwise linear
/// (squarefree), via polarization otherwise. A positive answer for I with a
/// negative answer for √I throws InconsistencyError.
Verdict is_scm(const MonomialIdeal& ideal, const DecisionOptions& options = {});

struct ClassificationReport {
    MonomialIdeal ideal;
    std::uint32_t characteristic = 0;
    std::vector<MonomialPrime> associated;
    std::vector<MonomialPrime> minimal;
    int dimension = 0;
    /// Stanley–Reisner complex dimension (squarefree input only).
    std::optional<int> complex_dimension;
    /// Ordered: generic, s1, cm, scm, clean, pretty_clean, almost_clean,
    /// then shellable for squarefree input.
    std::vector<std::pair<std::string, Verdict>> verdicts;

    const Verdict& at(const std::string& name) const;
    const Verdict* find(const std::string& name) const;
};

/// All predicates on one ideal. Known implications between the verdicts are
/// enforced; a violation throws InconsistencyError.
ClassificationReport classify(const MonomialIdeal& ideal, const DecisionOptions& options = {});

/// Implications broken by the verdicts of `report` (empty when consistent).
std::vector<std::string> implication_violations(const ClassificationReport& report);

struct HarnessDiagnostics {
    std::size_t checked = 0;
    std::size_t skipped = 0;
    std::vector<std::string> violations;
};

/// Runs every theorem-level cross-check that applies to each ideal: the
/// Eagon–Reiner pair, shellable vs dual linear quotients, the cleanness
/// chain, the generic-ideal equivalences, the low-dimensional and
/// single-degree equivalences, and Supp = Ass for filtrations of generic
/// ideals.
HarnessDiagnostics harness_check(const std::vector<MonomialIdeal>& sample, const DecisionOptions& options = {});

} // namespace monomideal
