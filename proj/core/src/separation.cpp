#include "interference/separation.hpp"

#include <algorithm>
#include <limits>

#include "interference/errors.hpp"

namespace interference {

SeparationValue refinement_separation_exact(const ExposureOutcomeModel& model,
                                            const ExposureSpec& coarse, int cap) {
    const ExposureSpec& fine = model.spec();
    const RefinementReport report = check_refinement(coarse, fine, cap);
    if (!report.is_refinement)
        throw DataError("separation is undefined: the model's spec does not refine the null");

    const std::size_t n = model.n();
    require_enumerable(n, cap);

    // Track the outcome range within each (unit, coarse exposure) bucket;
    // the sup of squared pairwise gaps is (max - min)^2.
    constexpr double kInf = std::numeric_limits<double>::infinity();
    std::vector<std::vector<double>> lo(n), hi(n);
    for (std::size_t i = 0; i < n; ++i) {
        lo[i].assign(coarse.exposure_count(i), kInf);
        hi[i].assign(coarse.exposure_count(i), -kInf);
    }
    for_each_intervention(
        n,
        [&](const Intervention& z, std::uint64_t) {
            for (std::size_t i = 0; i < n; ++i) {
                const std::uint32_t e = exposure_of(coarse, i, z);
                const double y = model.outcome(i, z);
                lo[i][e] = std::min(lo[i][e], y);
                hi[i][e] = std::max(hi[i][e], y);
            }
        },
        cap);

    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t e = 0; e < lo[i].size(); ++e)
            if (hi[i][e] >= lo[i][e]) {
                const double gap = hi[i][e] - lo[i][e];
                total += gap * gap;
            }
    return {total / static_cast<double>(n), 4.0 * report.s_avg};
}

SeparationValue refinement_separation_coeff(const ExposureOutcomeModel& model,
                                            const RefinementReport& report) {
    if (!report.is_refinement)
        throw UsageError("refinement_separation_coeff requires a verified refinement");
    const std::size_t n = model.n();
    if (report.split_sets.size() != n)
        throw UsageError("refinement report does not match the model's unit count");

    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (const auto& split : report.split_sets[i]) {
            if (split.size() < 2) continue;
            double lo = model.coeffs()[i][split.front()];
            double hi = lo;
            for (std::uint32_t f : split) {
                lo = std::min(lo, model.coeffs()[i][f]);
                hi = std::max(hi, model.coeffs()[i][f]);
            }
            total += (hi - lo) * (hi - lo);
        }
    }
    return {total / static_cast<double>(n), 4.0 * report.s_avg};
}

SeparationValue lim_separation(const LimModel& model) {
    double total = 0.0;
    for (const LimCoeffs& b : model.beta()) total += b.b3 * b.b3;
    return {total / static_cast<double>(model.n()), 4.0};
}

}  // namespace interference
