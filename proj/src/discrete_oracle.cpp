#include "bkwasym/discrete_oracle.hpp"

#include <cmath>
#include <string>

namespace bkwasym {

namespace {

// Suffix sums star_i = sum_{j >= i} log2(gamma_j) + cs*log2(n), 0-based.
std::vector<double> star_terms(const std::vector<double>& gammas, double cs, double log2n) {
    std::vector<double> star(gammas.size());
    double suffix = 0.0;
    for (std::size_t i = gammas.size(); i-- > 0;) {
        suffix += std::log2(gammas[i]);
        star[i] = suffix + cs * log2n;
    }
    return star;
}

}  // namespace

DiscreteSchedule build_schedule(double c, double alpha, double gamma_s, double gamma_f,
                                const ProblemParams& params, const Scenario& scenario,
                                const SieveCostModel& model, double log2n) {
    validate(params, scenario);
    if (!(c > 0.0)) throw DomainError("build_schedule: c must be positive");
    if (!(log2n >= 32.0)) throw DomainError("build_schedule: log2n >= 32 required");
    if (!(gamma_s > 0.0) || gamma_s > gamma_f || gamma_f > kSqrt2 + 1e-12)
        throw DomainError("build_schedule: need 0 < gamma_s <= gamma_f <= sqrt(2)");
    const double amax = alpha_max(params, scenario);
    if (alpha < 0.0 || alpha > amax) throw DomainError("build_schedule: alpha outside [0, alpha_max]");

    DiscreteSchedule sched;
    sched.log2n = log2n;
    sched.t2 = std::llround(alpha * log2n);
    sched.t1 = std::llround((amax - alpha) * log2n);
    sched.b = c / (params.cq * log2n);
    if (sched.t2 == 0) return sched;

    const auto t2 = static_cast<std::size_t>(sched.t2);
    sched.gammas.resize(t2);
    for (std::size_t i = 0; i < t2; ++i) {
        sched.gammas[i] = (t2 == 1) ? gamma_f
                                    : gamma_s + (gamma_f - gamma_s) * static_cast<double>(i) /
                                                    static_cast<double>(t2 - 1);
    }
    sched.lambdas.resize(t2);
    for (std::size_t i = 0; i < t2; ++i)
        sched.lambdas[i] = model.lambda(sched.gammas[i], scenario.compute);

    const std::vector<double> star = star_terms(sched.gammas, params.cs, log2n);
    const auto& lam = sched.lambdas;
    sched.step_sizes.resize(t2);
    sched.step_sizes[0] = c / (star[0] + lam[0]);
    for (std::size_t i = 1; i < t2; ++i) {
        sched.step_sizes[i] = (lam[i] * star[i - 1] * sched.step_sizes[i - 1] +
                               c * (lam[i - 1] - lam[i])) /
                              (lam[i - 1] * (star[i] + lam[i]));
    }
    double total = 0.0;
    for (std::size_t i = 0; i < t2; ++i) {
        if (!(sched.step_sizes[i] > 0.0))
            throw NonPositiveStep("step " + std::to_string(i + 1) + " is non-positive");
        total += sched.step_sizes[i];
    }
    sched.total_sieved = total;
    return sched;
}

OracleResult solve_c_discrete(double alpha, double gamma_s, double gamma_f,
                              const ProblemParams& params, const Scenario& scenario,
                              const SieveCostModel& model, double log2n) {
    // Balance residual (N + t1*b - n)/n; strictly increasing in c.
    auto residual = [&](double c) {
        DiscreteSchedule s =
            build_schedule(c, alpha, gamma_s, gamma_f, params, scenario, model, log2n);
        return s.total_sieved + static_cast<double>(s.t1) * s.b - 1.0;
    };

    double lo = 0.01, hi = 10.0;
    double rlo = residual(lo), rhi = residual(hi);
    if (rlo > 0.0 || rhi < 0.0)
        throw BisectionFailure("no sign change for c in (0.01, 10)");

    int iters = 0;
    double mid = 0.5 * (lo + hi), rmid = 0.0;
    for (; iters < 200; ++iters) {
        mid = 0.5 * (lo + hi);
        rmid = residual(mid);
        if (std::fabs(rmid) <= 1e-13) break;
        if (rmid < 0.0)
            lo = mid;
        else
            hi = mid;
    }
    if (std::fabs(rmid) > 1e-12)
        throw BisectionFailure("bisection did not reach the residual target");

    // Cross-check the closed expression for N at the solution.
    DiscreteSchedule s = build_schedule(mid, alpha, gamma_s, gamma_f, params, scenario, model, log2n);
    if (s.t2 > 0) {
        const std::vector<double> star = star_terms(s.gammas, params.cs, log2n);
        const double n_closed =
            (mid - star.back() * s.step_sizes.back()) / s.lambdas.back();
        if (std::fabs(s.total_sieved - n_closed) > 1e-8 * std::fabs(n_closed))
            throw BisectionFailure("closed-form total dimension cross-check failed");
    }
    return {mid, std::fabs(rmid), iters};
}

}  // namespace bkwasym
