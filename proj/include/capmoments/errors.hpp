#pragma once

#include <stdexcept>
#include <string>

namespace capmoments {

/// An identity that must hold by construction failed (non-integral count,
/// non-polynomial moment, path disagreement). Always indicates a bug, never bad input.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// An exhaustive enumeration would exceed the configured work budget.
class ResourceLimitError : public std::runtime_error {
public:
    ResourceLimitError(const std::string& what, double estimated_cost)
        : std::runtime_error(what), estimated_cost_(estimated_cost) {}
    [[nodiscard]] double estimated_cost() const noexcept { return estimated_cost_; }

private:
    double estimated_cost_;
};

}  // namespace capmoments
