#include "bkwasym/closed_forms.hpp"

#include <cmath>

namespace bkwasym {

RegimeLabel arora_ge_regime(double cs) {
    if (!(cs > 0.0)) throw DomainError("arora_ge_regime: cs must be positive");
    if (cs < 0.5) return RegimeLabel::polynomial;
    if (cs > 0.5) return RegimeLabel::superexponential;
    return RegimeLabel::boundary_unspecified;
}

double plain_bkw_exponent(const ProblemParams& params, SampleRegime samples) {
    double den = 2.0 * (params.cq - params.cs);
    if (samples == SampleRegime::exponential) den += 1.0;
    if (!(den > 0.0)) throw InvalidParams("plain_bkw_exponent: non-positive denominator");
    return params.cq / den;
}

double coded_bkw_exponent(const ProblemParams& params) {
    if (!(params.cq > params.cs) || !(params.cs > 0.0))
        throw InvalidParams("coded_bkw_exponent: cq > cs > 0 required");
    return 1.0 / (1.0 / params.cq + 2.0 * std::log(params.cq / params.cs));
}

double lattice_exponent(const ProblemParams& params, const Scenario& scenario,
                        const SieveCostModel& model) {
    double gap = params.cq - params.cs;
    if (scenario.samples == SampleRegime::exponential) gap += 0.5;
    if (!(gap > 0.0)) throw InvalidParams("lattice_exponent: non-positive denominator");
    const double lambda = model.lambda(1.0, scenario.compute);
    return 2.0 * lambda * params.cq / (gap * gap);
}

}  // namespace bkwasym
