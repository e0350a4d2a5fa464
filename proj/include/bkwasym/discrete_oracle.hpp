#pragma once

#include <cstdint>
#include <vector>

#include "bkwasym/core.hpp"
#include "bkwasym/sieve_model.hpp"

namespace bkwasym {

/// Explicit finite-n reduction schedule. n is treated as a real magnitude
/// through log2n; all lengths are stored as fractions of n, so the schedule
/// is scale-invariant in n.
struct DiscreteSchedule {
    double log2n = 0.0;
    std::int64_t t1 = 0;              // plain BKW steps
    std::int64_t t2 = 0;              // coded sieving steps
    double b = 0.0;                   // plain step size, fraction of n
    std::vector<double> gammas;       // per-step reduction factors (arithmetic)
    std::vector<double> lambdas;      // lambda(gamma_i)
    std::vector<double> step_sizes;   // n_i as fractions of n
    double total_sieved = 0.0;        // N = sum of step_sizes, fraction of n
};

struct OracleResult {
    double c_discrete = 0.0;
    double residual = 0.0;  // |N + t1*b - n| / n at convergence
    int bisection_iters = 0;
};

/// Builds the per-step schedule for a candidate exponent c: the first step
/// from the closed form, subsequent steps from the two-term recursion with
/// suffix log-sums of the gamma product.
/// Throws NonPositiveStep if some step size comes out non-positive.
DiscreteSchedule build_schedule(double c, double alpha, double gamma_s, double gamma_f,
                                const ProblemParams& params, const Scenario& scenario,
                                const SieveCostModel& model, double log2n);

/// Solves N(c) + t1*b(c) = n for c by bisection and cross-checks the closed
/// expression for N at the solution.
OracleResult solve_c_discrete(double alpha, double gamma_s, double gamma_f,
                              const ProblemParams& params, const Scenario& scenario,
                              const SieveCostModel& model, double log2n);

}  // namespace bkwasym
