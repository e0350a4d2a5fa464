#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "bkwasym/errors.hpp"

namespace bkwasym {

/// Monotonicity-preserving piecewise-cubic interpolant (Fritsch-Carlson
/// tangent limiting). Reproduces the data exactly at the nodes.
class PchipCurve {
  public:
    PchipCurve() = default;
    PchipCurve(std::vector<double> x, std::vector<double> y);

    double operator()(double t) const;

    const std::vector<double>& nodes() const { return x_; }
    const std::vector<double>& values() const { return y_; }

  private:
    std::vector<double> x_;
    std::vector<double> y_;
    std::vector<double> slope_;  // endpoint derivatives per node
};

struct QuadratureSpec {
    double abs_tol = 1e-10;
    std::uint64_t max_subdivisions = std::uint64_t{1} << 20;
};

using Integrand = std::function<double(double)>;

/// Adaptive Gauss-Kronrod (G7/K15) integral of f over [lo, hi].
///
/// Throws NonFiniteIntegrand if f returns a non-finite value and
/// ToleranceNotReached if the subdivision budget runs out.
double integrate(const Integrand& f, double lo, double hi, const QuadratureSpec& spec = {});

/// Running integral t -> int_0^t f on a uniform grid over [0, T].
class CumulativeIntegral {
  public:
    CumulativeIntegral() = default;
    CumulativeIntegral(std::vector<double> grid, std::vector<double> values);

    double operator()(double t) const { return curve_(t); }

    const std::vector<double>& grid() const { return curve_.nodes(); }
    const std::vector<double>& values() const { return curve_.values(); }

  private:
    PchipCurve curve_;
};

/// Builds a CumulativeIntegral of f over [0, T]; each panel is integrated
/// adaptively so that every grid value agrees with integrate(f, 0, t) to
/// within 10 * spec.abs_tol.
CumulativeIntegral cumulative(const Integrand& f, double T, std::size_t grid_points,
                              const QuadratureSpec& spec = {});

/// Feasibility-cut surrogate for +infinity inside minimize_box objectives.
inline constexpr double kPenalty = 1e30;

struct MinimizerSpec {
    /// Start points per dimension for the deterministic lattice multistart.
    /// If shorter than the problem dimension the last entry repeats.
    std::vector<std::size_t> multistart_grid = {12};
    double param_tol = 1e-6;
    double objective_tol = 1e-9;
    std::uint64_t max_iters = 10000;
};

using BoxObjective = std::function<double(const std::vector<double>&)>;

struct MinimizeResult {
    std::vector<double> arg;
    double value = 0.0;
    std::uint64_t objective_evals = 0;
    bool converged = false;
};

/// Deterministic lattice multistart followed by Nelder-Mead refinement with
/// box projection. `extra_starts` are prepended to the lattice, so seeding
/// with a known-good point guarantees the result is at least that good.
///
/// Throws NoFeasiblePoint if every probe returned the penalty value.
MinimizeResult minimize_box(const BoxObjective& f, const std::vector<double>& lower,
                            const std::vector<double>& upper, const MinimizerSpec& spec = {},
                            const std::vector<std::vector<double>>& extra_starts = {});

}  // namespace bkwasym
