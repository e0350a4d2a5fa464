#pragma once

#include "bkwasym/core.hpp"
#include "bkwasym/sieve_model.hpp"

namespace bkwasym {

/// Behaviour of the Arora-Ge algorithm as a function of cs. The boundary
/// cs = 0.5 gets its own label; both strict regimes exclude it.
enum class RegimeLabel { polynomial, superexponential, boundary_unspecified };

RegimeLabel arora_ge_regime(double cs);

/// cq/(2(cq-cs)+1) with exponentially many samples, cq/(2(cq-cs)) with
/// polynomially many.
double plain_bkw_exponent(const ProblemParams& params, SampleRegime samples);

/// 1/(1/cq + 2 ln(cq/cs)); the same for both sample regimes.
double coded_bkw_exponent(const ProblemParams& params);

/// 2*lambda*cq/(cq-cs+1/2)^2 (exponential samples) or 2*lambda*cq/(cq-cs)^2
/// (polynomial samples), with lambda read off the sieve model at gamma = 1.
double lattice_exponent(const ProblemParams& params, const Scenario& scenario,
                        const SieveCostModel& model);

}  // namespace bkwasym
