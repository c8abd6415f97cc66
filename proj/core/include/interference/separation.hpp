#pragma once

#include "interference/exposure.hpp"
#include "interference/lim_model.hpp"
#include "interference/refinement.hpp"

namespace interference {

/// A separation value together with the trivial-separation boundary:
/// the alternative class M1(delta) is empty exactly when delta > max_g,
/// so the boundary delta = max_g is still non-trivial.
struct SeparationValue {
    double g = 0.0;
    double max_g = 0.0;
};

/// Brute-force refinement separation: for each unit and coarse exposure,
/// the largest squared outcome gap over all intervention pairs sharing that
/// coarse exposure, summed and averaged over units. Enumerates Omega, so it
/// requires n <= cap. Throws DataError when the model's spec does not
/// refine `coarse`.
SeparationValue refinement_separation_exact(const ExposureOutcomeModel& model,
                                            const ExposureSpec& coarse,
                                            int cap = kDefaultEnumerationCap);

/// Coefficient-route refinement separation: per split set, the squared gap
/// between the extreme fine coefficients. Agrees with the exact route
/// whenever both are computable. Requires report.is_refinement.
SeparationValue refinement_separation_coeff(const ExposureOutcomeModel& model,
                                            const RefinementReport& report);

/// Linear-in-means separation: (1/n) sum_i b3_i^2, with max_g = 4.
SeparationValue lim_separation(const LimModel& model);

}  // namespace interference
