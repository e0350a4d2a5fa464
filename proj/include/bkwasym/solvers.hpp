#pragma once

#include "bkwasym/core.hpp"
#include "bkwasym/numerics.hpp"
#include "bkwasym/sieve_model.hpp"

namespace bkwasym {

/// The search box for the constant reduction factor stops just short of
/// sqrt(2): the constant-schedule objective contains 1/lambda(gamma) and
/// lambda(sqrt(2)) = 0. The coded-BKW closed form covers the endpoint.
inline constexpr double kGammaSolverHi = kSqrt2 - 1e-6;

/// Everything an objective evaluation needs, immutable once built.
struct ObjectiveContext {
    ProblemParams params;
    Scenario scenario;
    const SieveCostModel* model = nullptr;
    QuadratureSpec quadrature;
    double alpha_limit = 0.0;

    static ObjectiveContext make(const ProblemParams& params, const Scenario& scenario,
                                 const SieveCostModel& model, QuadratureSpec quad = {}) {
        validate(params, scenario);
        return {params, scenario, &model, quad, alpha_max(params, scenario)};
    }
};

/// Inner log-integral of the constant-gamma objective,
/// int_0^alpha (log2(gamma) - lambda(gamma)) / (t*log2(gamma) + cs) dt,
/// evaluated in closed form (constant-integrand branch at gamma = 1).
double inner_log_integral_t1(double alpha, double gamma, const ObjectiveContext& ctx);

/// Constant-gamma complexity exponent c(alpha, gamma).
double objective_t1(double alpha, double gamma, const ObjectiveContext& ctx);

/// Continuum reduction factor along the arithmetic schedule;
/// gamma(0) = gamma_f, gamma(alpha) = gamma_s.
double gamma_of_s(double s, double alpha, double gamma_s, double gamma_f);

/// Continuum per-step log-growth along the arithmetic schedule, with the
/// removable singularity at s = 0 evaluated as log2(gamma_f).
double ell_of_s(double s, double alpha, double gamma_s, double gamma_f);

/// Inner log-integral of the arithmetic-schedule objective at a single t.
/// Builds the cumulative carrier for the given (alpha, gamma_s, gamma_f) and
/// evaluates it; objective_t2 amortizes the build across the outer integral.
double inner_log_integral_t2(double t, double alpha, double gamma_s, double gamma_f,
                             const ObjectiveContext& ctx);

/// Arithmetic-schedule complexity exponent c(alpha, gamma_s, gamma_f).
/// Routes to objective_t1 when gamma_s == gamma_f.
double objective_t2(double alpha, double gamma_s, double gamma_f, const ObjectiveContext& ctx);

/// Optimizes the exponent for the requested algorithm kind. Sieve kinds run
/// minimize_box over the schedule parameters; plain/coded/lattice delegate
/// to the closed forms.
ExponentResult solve(const ProblemParams& params, const Scenario& scenario,
                     const AlgorithmKind& kind, const SieveCostModel& model,
                     QuadratureSpec quad = {});

}  // namespace bkwasym
