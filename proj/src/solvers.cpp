#include "bkwasym/solvers.hpp"

#include <algorithm>
#include <cmath>

#include "bkwasym/closed_forms.hpp"

namespace bkwasym {

namespace {

constexpr double kLog2GammaOne = 1e-12;   // below this, use the gamma = 1 branch
constexpr double kDegenerateGap = 1e-9;   // below this, route t2 -> t1
constexpr std::size_t kInnerGridPoints = 513;

// Positivity cut for the denominators s*ell(s) + cs. Values this close to
// zero sit far past the blow-up of the objective (the exponent diverges as
// the denominator vanishes), but make the adaptive quadrature arbitrarily
// expensive; cutting them off keeps infeasible probes cheap.
constexpr double kDenCut = 1e-4;

double lambda_lookup(double gamma, const ObjectiveContext& ctx) {
    return ctx.model->lambda(gamma, ctx.scenario.compute);
}

void check_alpha(double alpha, const ObjectiveContext& ctx) {
    if (!(alpha >= 0.0) || alpha > ctx.alpha_limit + 1e-12)
        throw DomainError("alpha outside [0, alpha_max]");
}

}  // namespace

double inner_log_integral_t1(double alpha, double gamma, const ObjectiveContext& ctx) {
    check_alpha(alpha, ctx);
    if (alpha == 0.0) return 0.0;
    const double cs = ctx.params.cs;
    const double lg = std::log2(gamma);
    const double lambda = lambda_lookup(gamma, ctx);
    if (std::fabs(lg) < kLog2GammaOne) return -lambda * alpha / cs;
    // The denominator t*log2(gamma) + cs is linear in t; positivity on
    // [0, alpha] reduces to the endpoint.
    const double end = alpha * lg + cs;
    if (end <= 0.0) throw InfeasibleSchedule("t*log2(gamma) + cs <= 0 on the integration range");
    return (lg - lambda) / lg * std::log(end / cs);
}

double objective_t1(double alpha, double gamma, const ObjectiveContext& ctx) {
    check_alpha(alpha, ctx);
    if (!(gamma > 0.0) || gamma > kGammaSolverHi)
        throw DomainError("objective_t1: gamma must lie in (0, sqrt(2) - 1e-6]");
    const double cq = ctx.params.cq;
    const double cs = ctx.params.cs;
    const double first = (ctx.alpha_limit - alpha) / cq;
    if (alpha == 0.0) return cq / ctx.alpha_limit;

    const double lambda = lambda_lookup(gamma, ctx);
    if (!(lambda > 0.0)) throw NonFiniteObjective("objective_t1: lambda underflow");
    const double inner = inner_log_integral_t1(alpha, gamma, ctx);
    const double lg = std::log2(gamma);
    const double den_end = alpha * lg + cs;
    const double bracket = first + (1.0 / lambda) * (1.0 - cs / den_end * std::exp(inner));
    if (!std::isfinite(bracket) || bracket <= 0.0)
        throw NonFiniteObjective("objective_t1: non-positive objective bracket");
    return 1.0 / bracket;
}

double gamma_of_s(double s, double alpha, double gamma_s, double gamma_f) {
    if (!(alpha > 0.0)) throw DomainError("gamma_of_s: alpha must be positive");
    if (s < -1e-12 * alpha || s > alpha * (1.0 + 1e-12))
        throw DomainError("gamma_of_s: s outside [0, alpha]");
    s = std::clamp(s, 0.0, alpha);
    return gamma_s + (alpha - s) / alpha * (gamma_f - gamma_s);
}

double ell_of_s(double s, double alpha, double gamma_s, double gamma_f) {
    if (!(gamma_f > gamma_s))
        throw DegenerateSchedule("ell_of_s: gamma_s == gamma_f; use the constant-gamma path");
    if (!(alpha > 0.0)) throw DomainError("ell_of_s: alpha must be positive");
    if (s < -1e-12 * alpha || s > alpha * (1.0 + 1e-12))
        throw DomainError("ell_of_s: s outside [0, alpha]");
    if (s < 1e-6 * alpha) return std::log2(gamma_f);
    const double g = gamma_of_s(s, alpha, gamma_s, gamma_f);
    const double num = gamma_f * std::log(gamma_f) - g * std::log(g);
    return (num / (gamma_f - gamma_s) * (alpha / s) - 1.0) / std::log(2.0);
}

namespace {

// Shared state for one (alpha, gamma_s, gamma_f) triple: the inner
// log-integral tabulated once, reused across the outer integral.
struct ArithmeticScheduleEval {
    double alpha, gamma_s, gamma_f, cs;
    const ObjectiveContext* ctx;
    CumulativeIntegral inner;

    ArithmeticScheduleEval(double a, double gs, double gf, const ObjectiveContext& c)
        : alpha(a), gamma_s(gs), gamma_f(gf), cs(c.params.cs), ctx(&c) {
        auto integrand = [this](double s) {
            const double den = s * ell_of_s(s, alpha, gamma_s, gamma_f) + cs;
            if (den <= kDenCut)
                throw InfeasibleSchedule("s*ell(s) + cs vanishes on the integration range");
            const double g = gamma_of_s(s, alpha, gamma_s, gamma_f);
            return (std::log2(g) - lambda_lookup(g, *ctx)) / den;
        };
        inner = cumulative(integrand, alpha, kInnerGridPoints, ctx->quadrature);
    }

    double outer_integrand(double t) const {
        const double den = t * ell_of_s(t, alpha, gamma_s, gamma_f) + cs;
        if (den <= kDenCut)
            throw InfeasibleSchedule("t*ell(t) + cs vanishes on the integration range");
        return cs / (den * den) * std::exp(inner(t));
    }
};

}  // namespace

double inner_log_integral_t2(double t, double alpha, double gamma_s, double gamma_f,
                             const ObjectiveContext& ctx) {
    check_alpha(alpha, ctx);
    if (t < 0.0 || t > alpha * (1.0 + 1e-12))
        throw DomainError("inner_log_integral_t2: t outside [0, alpha]");
    if (t == 0.0 || alpha == 0.0) return 0.0;
    if (gamma_f - gamma_s < kDegenerateGap) return inner_log_integral_t1(t, gamma_s, ctx);
    ArithmeticScheduleEval eval(alpha, gamma_s, gamma_f, ctx);
    return eval.inner(t);
}

double objective_t2(double alpha, double gamma_s, double gamma_f, const ObjectiveContext& ctx) {
    check_alpha(alpha, ctx);
    if (!(gamma_s > 0.0) || gamma_s > gamma_f || gamma_f > kSqrt2 + 1e-12)
        throw DomainError("objective_t2: need 0 < gamma_s <= gamma_f <= sqrt(2)");
    if (gamma_f - gamma_s < kDegenerateGap) return objective_t1(alpha, gamma_s, ctx);

    const double cq = ctx.params.cq;
    const double first = (ctx.alpha_limit - alpha) / cq;
    if (alpha < 1e-12) return cq / ctx.alpha_limit;

    ArithmeticScheduleEval eval(alpha, gamma_s, gamma_f, ctx);
    const double outer = integrate([&eval](double t) { return eval.outer_integrand(t); }, 0.0,
                                   alpha, ctx.quadrature);
    const double bracket = first + outer;
    if (!std::isfinite(bracket) || bracket <= 0.0)
        throw NonFiniteObjective("objective_t2: non-positive objective bracket");
    return 1.0 / bracket;
}

// ---------------------------------------------------------------------------
// Outer optimization

namespace {

constexpr double kGammaBoxLo = 0.06;  // just above the tabulated lambda range

// Penalty-wrapped objective for the minimizer: infeasible schedules become
// large finite values instead of exceptions.
template <typename F>
BoxObjective penalized(F&& f) {
    return [f = std::forward<F>(f)](const std::vector<double>& x) -> double {
        try {
            return f(x);
        } catch (const InfeasibleSchedule&) {
            return kPenalty;
        } catch (const NonFiniteObjective&) {
            return kPenalty;
        } catch (const DomainError&) {
            return kPenalty;
        } catch (const NonFiniteIntegrand&) {
            return kPenalty;
        } catch (const ToleranceNotReached&) {
            return kPenalty;
        }
    };
}

ExponentResult solve_fixed_one(const ObjectiveContext& ctx) {
    MinimizerSpec spec;
    spec.multistart_grid = {24};
    auto f = penalized([&ctx](const std::vector<double>& x) { return objective_t1(x[0], 1.0, ctx); });
    MinimizeResult r = minimize_box(f, {0.0}, {ctx.alpha_limit}, spec);
    return {r.value, r.arg[0], GammaSchedule::fixed_one(), r.objective_evals, r.converged};
}

ExponentResult solve_constant(const ObjectiveContext& ctx) {
    ExponentResult seed = solve_fixed_one(ctx);
    MinimizerSpec spec;
    spec.multistart_grid = {12, 12};
    auto f = penalized(
        [&ctx](const std::vector<double>& x) { return objective_t1(x[0], x[1], ctx); });
    MinimizeResult r = minimize_box(f, {0.0, kGammaBoxLo}, {ctx.alpha_limit, kGammaSolverHi}, spec,
                                    {{seed.alpha_opt, 1.0}});
    return {r.value, r.arg[0], GammaSchedule::constant(r.arg[1]),
            r.objective_evals + seed.objective_evals, r.converged};
}

ExponentResult solve_arithmetic(const ObjectiveContext& ctx) {
    ExponentResult seed = solve_constant(ctx);
    const double gc = seed.schedule_opt.gamma_s;

    MinimizerSpec spec;
    spec.multistart_grid = {4, 4, 4};
    // Variables: alpha, gamma_s, delta with gamma_f = gamma_s + delta.
    auto f = penalized([&ctx](const std::vector<double>& x) {
        const double gf = x[1] + x[2];
        if (gf > kSqrt2) throw InfeasibleSchedule("gamma_f > sqrt(2)");
        return objective_t2(x[0], x[1], gf, ctx);
    });
    std::vector<std::vector<double>> seeds = {
        {seed.alpha_opt, gc, 0.0},
        {seed.alpha_opt, std::max(kGammaBoxLo, 0.65 * gc), 0.5 * gc},
    };
    MinimizeResult r = minimize_box(f, {0.0, kGammaBoxLo, 0.0},
                                    {ctx.alpha_limit, kGammaSolverHi, kSqrt2 - kGammaBoxLo}, spec,
                                    seeds);
    const double gs = r.arg[1];
    const double gf = std::min(r.arg[1] + r.arg[2], kSqrt2);
    return {r.value, r.arg[0], GammaSchedule::arithmetic(gs, gf),
            r.objective_evals + seed.objective_evals, r.converged};
}

}  // namespace

ExponentResult solve(const ProblemParams& params, const Scenario& scenario,
                     const AlgorithmKind& kind, const SieveCostModel& model, QuadratureSpec quad) {
    validate(params, scenario);
    switch (kind.tag) {
        case AlgorithmKind::Tag::plain_bkw:
            return {plain_bkw_exponent(params, scenario.samples), 0.0, GammaSchedule::fixed_one(),
                    0, true};
        case AlgorithmKind::Tag::coded_bkw:
            return {coded_bkw_exponent(params), 0.0, GammaSchedule::constant(kSqrt2), 0, true};
        case AlgorithmKind::Tag::lattice:
            return {lattice_exponent(params, scenario, model), 0.0, GammaSchedule::fixed_one(), 0,
                    true};
        case AlgorithmKind::Tag::sieve:
            break;
    }
    // Bound the per-evaluation quadrature work during optimization; probes
    // that exhaust the budget are treated as infeasible by the penalty
    // wrapper, and feasible optima converge far below this cap.
    quad.max_subdivisions = std::min<std::uint64_t>(quad.max_subdivisions, 1 << 14);
    ObjectiveContext ctx = ObjectiveContext::make(params, scenario, model, quad);
    switch (kind.schedule.kind) {
        case GammaSchedule::Kind::fixed_one:
            return solve_fixed_one(ctx);
        case GammaSchedule::Kind::constant:
            return solve_constant(ctx);
        case GammaSchedule::Kind::arithmetic:
            return solve_arithmetic(ctx);
    }
    throw DomainError("solve: unknown schedule kind");
}

}  // namespace bkwasym
