#pragma once

#include <stdexcept>
#include <string>

namespace monomideal {

/// Operation called on an input outside its domain (zero/unit ideal, void complex, ...).
class DegenerateInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Two operands live in different polynomial rings.
class AmbientMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Squarefree input required.
class NotSquarefree : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Two independent decision routes disagreed, or a verdict set broke a
/// known implication. Always an implementation bug.
class InconsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A bounded search ran out of its time budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace monomideal
