#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "monomideal/filtrations.hpp"

namespace monomideal {

struct CorpusEntry {
    std::string name;
    /// Input document in the text format.
    std::string document;
    /// Expected verdicts by report property name.
    std::vector<std::pair<std::string, Truth>> expected;
    /// Expected generators of the radical / Alexander dual (empty: not checked).
    std::string expected_radical;
    std::string expected_dual;
    /// Long-running search: an undecided verdict under the time budget is tolerated.
    bool extended = false;
};

/// The worked examples: the generic counterexample, its radical J and J^∨,
/// the Terai ideal in characteristics 0 and 2, the 11-variable quadratic
/// ideal and (x1^2, x1*x2).
const std::vector<CorpusEntry>& builtin_corpus();


struct CorpusSummary {
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t undecided = 0;
};

/// Classifies every corpus entry and prints one PASS/FAIL/UNDECIDED line per
/// entry. `extended_budget_seconds` bounds the searches of extended entries.
CorpusSummary run_corpus(std::ostream& out, double extended_budget_seconds, bool want_certificate = false);

} // namespace monomideal
