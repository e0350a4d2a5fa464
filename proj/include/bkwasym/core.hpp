#pragma once

#include <cmath>
#include <cstdint>
#include <string>

#include "bkwasym/errors.hpp"

namespace bkwasym {

inline constexpr double kSqrt2 = 1.4142135623730951;

/// Asymptotic LWE parameters: modulus q = n^cq, noise width sigma = n^cs.
struct ProblemParams {
    double cq;
    double cs;
};

enum class ComputeModel { classical, quantum };
enum class SampleRegime { exponential, polynomial };

/// Compute model x sample regime.
struct Scenario {
    ComputeModel compute = ComputeModel::classical;
    SampleRegime samples = SampleRegime::exponential;
};

/// Reduction-factor schedule for the sieving steps.
///
/// fixed_one is semantically identical to constant(1.0); it is kept as a
/// separate kind so the solver can skip the gamma search dimension.
struct GammaSchedule {
    enum class Kind { fixed_one, constant, arithmetic };

    Kind kind = Kind::fixed_one;
    double gamma_s = 1.0;
    double gamma_f = 1.0;

    static GammaSchedule fixed_one() { return {Kind::fixed_one, 1.0, 1.0}; }

    static GammaSchedule constant(double gamma) {
        if (!(gamma > 0.0) || gamma > kSqrt2 + 1e-12)
            throw InvalidParams("constant gamma must lie in (0, sqrt(2)], got " + std::to_string(gamma));
        return {Kind::constant, gamma, gamma};
    }

    static GammaSchedule arithmetic(double gs, double gf) {
        if (!(gs > 0.0) || gs > gf || gf > kSqrt2 + 1e-12)
            throw InvalidParams("arithmetic schedule needs 0 < gamma_s <= gamma_f <= sqrt(2)");
        return {Kind::arithmetic, gs, gf};
    }
};

/// Dispatch tag over the algorithm families.
struct AlgorithmKind {
    enum class Tag { plain_bkw, coded_bkw, lattice, sieve };

    Tag tag = Tag::sieve;
    GammaSchedule schedule;  // meaningful for sieve only

    static AlgorithmKind plain_bkw() { return {Tag::plain_bkw, {}}; }
    static AlgorithmKind coded_bkw() { return {Tag::coded_bkw, {}}; }
    static AlgorithmKind lattice() { return {Tag::lattice, {}}; }
    static AlgorithmKind sieve(GammaSchedule sched) { return {Tag::sieve, sched}; }
};

/// Optimized complexity exponent c (time 2^{cn+o(n)}) plus arg-min data.
struct ExponentResult {
    double c = 0.0;
    double alpha_opt = 0.0;
    GammaSchedule schedule_opt;
    std::uint64_t objective_evals = 0;
    bool converged = false;
};

/// Upper limit of the plain-BKW fraction alpha for a scenario.
///
/// 2(cq - cs) + 1 with exponentially many samples, 2(cq - cs) with
/// polynomially many.
inline double alpha_max(const ProblemParams& p, const Scenario& s) {
    double base = 2.0 * (p.cq - p.cs);
    return s.samples == SampleRegime::exponential ? base + 1.0 : base;
}

/// Accepts iff cq > cs > 0 and the scenario's alpha_max is positive.
/// Throws InvalidParams naming the violated constraint otherwise.
inline void validate(const ProblemParams& p, const Scenario& s) {
    if (!std::isfinite(p.cq) || !std::isfinite(p.cs))
        throw InvalidParams("cq and cs must be finite");
    if (!(p.cs > 0.0))
        throw InvalidParams("cs must be positive, got " + std::to_string(p.cs));
    if (!(p.cq > p.cs))
        throw InvalidParams("cq > cs required, got cq = " + std::to_string(p.cq) +
                            ", cs = " + std::to_string(p.cs));
    if (!(alpha_max(p, s) > 0.0))
        throw InvalidParams("alpha_max must be positive for this scenario");
}

inline const char* to_string(ComputeModel m) {
    return m == ComputeModel::classical ? "classical" : "quantum";
}

inline const char* to_string(SampleRegime r) {
    return r == SampleRegime::exponential ? "exponential" : "polynomial";
}

}  // namespace bkwasym
