#pragma once

#include <chrono>
#include <optional>

#include "monomideal/errors.hpp"

namespace monomideal {

/// Wall-clock deadline shared by the exhaustive searches.
class Deadline {
public:
    using Clock = std::chrono::steady_clock;

    Deadline() = default;

    static Deadline none() { return {}; }
    static Deadline after(std::chrono::duration<double> budget) {
        Deadline d;
        d.at_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(budget);
        return d;
    }

    bool bounded() const { return at_.has_value(); }
    bool expired() const { return at_ && Clock::now() >= *at_; }

    /// Throws BudgetExceeded once the deadline has passed. Cheap enough to
    /// call every few hundred search nodes.
    void check(const char* what) const {
        if (expired()) throw BudgetExceeded(std::string(what) + ": time budget exhausted");
    }

private:
    std::optional<Clock::time_point> at_;
};

} // namespace monomideal
