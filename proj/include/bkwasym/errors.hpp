#pragma once

#include <stdexcept>
#include <string>

namespace bkwasym {

/// Argument outside the mathematical domain of an operation.
struct DomainError : std::invalid_argument {
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// Problem parameters violate a structural constraint (e.g. cq <= cs).
struct InvalidParams : std::invalid_argument {
    explicit InvalidParams(const std::string& what) : std::invalid_argument(what) {}
};

/// A reduction schedule whose positivity cut fails somewhere on the
/// integration range.
struct InfeasibleSchedule : std::runtime_error {
    explicit InfeasibleSchedule(const std::string& what) : std::runtime_error(what) {}
};

/// gamma_s == gamma_f where the arithmetic-schedule formulas degenerate;
/// callers must route to the constant-gamma path instead.
struct DegenerateSchedule : std::invalid_argument {
    explicit DegenerateSchedule(const std::string& what) : std::invalid_argument(what) {}
};

struct NonFiniteIntegrand : std::runtime_error {
    explicit NonFiniteIntegrand(const std::string& what) : std::runtime_error(what) {}
};

struct ToleranceNotReached : std::runtime_error {
    explicit ToleranceNotReached(const std::string& what) : std::runtime_error(what) {}
};

struct NonFiniteObjective : std::runtime_error {
    explicit NonFiniteObjective(const std::string& what) : std::runtime_error(what) {}
};

/// Every probe of a box-constrained minimization returned the penalty value.
struct NoFeasiblePoint : std::runtime_error {
    explicit NoFeasiblePoint(const std::string& what) : std::runtime_error(what) {}
};

/// A step size of the discrete schedule came out non-positive, signalling an
/// inconsistent complexity exponent.
struct NonPositiveStep : std::runtime_error {
    explicit NonPositiveStep(const std::string& what) : std::runtime_error(what) {}
};

struct BisectionFailure : std::runtime_error {
    explicit BisectionFailure(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace bkwasym
