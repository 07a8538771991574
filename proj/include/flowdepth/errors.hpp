#ifndef FLOWDEPTH_ERRORS_HPP
#define FLOWDEPTH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace flowdepth {

// Base for all domain-level failures; the CLI maps these to exit code 3.
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

struct NonPositiveSlope : DomainError {
    explicit NonPositiveSlope(const std::string& what = "slope at or below positivity floor")
        : DomainError(what) {}
};

struct DegenerateSegment : DomainError {
    explicit DegenerateSegment(const std::string& what = "zero-width piecewise-linear segment")
        : DomainError(what) {}
};

struct BoundaryViolation : DomainError {
    explicit BoundaryViolation(const std::string& what = "function violates required boundary values")
        : DomainError(what) {}
};

struct NonMonotoneSamples : DomainError {
    explicit NonMonotoneSamples(const std::string& what = "sample values are not strictly increasing")
        : DomainError(what) {}
};

struct MonotonicityViolation : DomainError {
    explicit MonotonicityViolation(const std::string& what = "flow map lost monotonicity")
        : DomainError(what) {}
};

struct BudgetExceeded : DomainError {
    explicit BudgetExceeded(const std::string& what = "realized schedule exceeds its time budget")
        : DomainError(what) {}
};

struct ConfigViolation : DomainError {
    explicit ConfigViolation(const std::string& what = "lift configuration violates the segment condition")
        : DomainError(what) {}
};

struct ZeroDivisor : DomainError {
    explicit ZeroDivisor(const std::string& what = "kernel coefficient too close to zero")
        : DomainError(what) {}
};

struct NonInvertible : DomainError {
    explicit NonInvertible(const std::string& what = "map is not invertible on the grid")
        : DomainError(what) {}
};

struct NonPositiveRho : DomainError {
    explicit NonPositiveRho(const std::string& what = "derivative ratio is not positive")
        : DomainError(what) {}
};

struct LpUnbounded : DomainError {
    explicit LpUnbounded(const std::string& what = "linear program is unbounded")
        : DomainError(what) {}
};

struct LpInfeasible : DomainError {
    explicit LpInfeasible(const std::string& what = "linear program is infeasible")
        : DomainError(what) {}
};

}  // namespace flowdepth

#endif
