#include "interference/mixtures.hpp"

#include <algorithm>
#include <cmath>

#include "interference/errors.hpp"
#include "interference/parallel.hpp"
#include "interference/rng.hpp"

namespace interference {

namespace {

constexpr std::uint64_t kNullTag = 0;
constexpr std::uint64_t kAltTag = 1;

}  // namespace

double MixtureDraw::coefficient(std::size_t unit, std::uint32_t exposure_id) const {
    if (side_ == MixtureSide::Null) {
        // Independent uniform sign per (unit, coarse exposure).
        return rng::keyed_sign(seed_, kNullTag, unit, exposure_id);
    }
    if (pair_->alt_unit_forced(unit)) return 1.0;
    if (pair_->kind_ == MixturePair::Kind::Sutva) {
        // beta_{i,1} = -beta_{i,0} with beta_{i,0} a uniform sign.
        const double base = rng::keyed_sign(seed_, kAltTag, unit, 0);
        return exposure_id == 0 ? base : -base;
    }
    const RefinementReport& report = pair_->report();
    const std::uint32_t coarse_id = report.to_coarse[unit][exposure_id];
    const std::uint32_t position = report.split_position[unit][exposure_id];
    if (coarse_id == RefinementReport::kUnrealized)
        throw UsageError("mixture draw asked for an unrealized exposure id");
    const double sign = rng::keyed_sign(seed_, kAltTag, unit, coarse_id);
    const double v = position == 0 ? 1.0 : -1.0;
    return sign * v;
}

double MixtureDraw::outcome(std::size_t unit, const Intervention& z) const {
    return coefficient(unit, exposure_of(spec(), unit, z));
}

std::vector<double> MixtureDraw::evaluate(const Intervention& z) const {
    std::vector<double> y(spec().n());
    for (std::size_t i = 0; i < y.size(); ++i) y[i] = outcome(i, z);
    return y;
}

ExposureOutcomeModel MixtureDraw::materialize() const {
    const ExposureSpec& s = spec();
    std::vector<std::vector<double>> coeffs(s.n());
    for (std::size_t i = 0; i < s.n(); ++i) {
        coeffs[i].resize(s.exposure_count(i));
        for (std::uint32_t e = 0; e < coeffs[i].size(); ++e) {
            const bool realized = pair_->kind_ == MixturePair::Kind::Sutva ||
                                  side_ == MixtureSide::Null ||
                                  pair_->report().to_coarse[i][e] != RefinementReport::kUnrealized;
            coeffs[i][e] = realized ? coefficient(i, e) : 0.0;
        }
    }
    return ExposureOutcomeModel(s, std::move(coeffs));
}

const ExposureSpec& MixtureDraw::spec() const {
    return side_ == MixtureSide::Null ? pair_->coarse() : pair_->fine();
}

MixturePair MixturePair::with_forced_alt_unit(std::size_t unit) const {
    if (unit >= n()) throw UsageError("forced unit index out of range");
    MixturePair copy = *this;
    copy.forced_alt_units_.push_back(unit);
    std::sort(copy.forced_alt_units_.begin(), copy.forced_alt_units_.end());
    return copy;
}

bool MixturePair::alt_unit_forced(std::size_t unit) const {
    return std::binary_search(forced_alt_units_.begin(), forced_alt_units_.end(), unit);
}

MixturePair sutva_mixtures(std::size_t n) {
    if (n == 0) throw UsageError("sutva_mixtures requires n >= 1");
    ExposureSpec coarse = ExposureSpec::no_effect(n);
    ExposureSpec fine = ExposureSpec::own_treatment(n);
    auto report = std::make_shared<RefinementReport>(check_refinement(coarse, fine));
    return MixturePair(MixturePair::Kind::Sutva, std::move(coarse), std::move(fine),
                       std::move(report));
}

MixturePair general_mixtures(ExposureSpec coarse, ExposureSpec fine, RefinementReport report) {
    if (!report.is_refinement)
        throw UsageError("general_mixtures requires a verified refinement");
    if (coarse.n() != fine.n()) throw UsageError("general_mixtures: unit count mismatch");
    return MixturePair(MixturePair::Kind::General, std::move(coarse), std::move(fine),
                       std::make_shared<RefinementReport>(std::move(report)));
}

MarginalDist marginal_dist(const MixturePair& pair, MixtureSide side, const Intervention& z) {
    if (z.size() != pair.n()) throw UsageError("marginal_dist: intervention length mismatch");
    // Coordinate i reads one sign variable (selected by the realized coarse
    // exposure) times a fixed +/-1 entry of v (selected by the realized fine
    // exposure), so it is uniform on {-1,+1}; distinct units read distinct
    // sign variables, making the coordinates independent. Forced units are
    // pinned to +1.
    std::vector<double> prob_plus(pair.n());
    for (std::size_t i = 0; i < pair.n(); ++i)
        prob_plus[i] = side == MixtureSide::Alt && pair.alt_unit_forced(i) ? 1.0 : 0.5;
    return MarginalDist::factorized_signs(std::move(prob_plus));
}

double risk_lower_bound(const MixturePair& pair, const Design& design, int cap) {
    if (design.n() != pair.n()) throw UsageError("risk_lower_bound: design/pair size mismatch");
    double expected_tv = 0.0;
    enumerate_design(
        design,
        [&](const Intervention& z, double prob) {
            const MarginalDist p0 = marginal_dist(pair, MixtureSide::Null, z);
            const MarginalDist p1 = marginal_dist(pair, MixtureSide::Alt, z);
            expected_tv += prob * tv_distance(p0, p1, cap);
        },
        cap);
    return 1.0 - expected_tv;
}

Estimate mixture_error_sum(const TestProcedure& proc, const MixturePair& pair, std::size_t reps,
                           std::uint64_t seed, int threads) {
    if (reps < 2) throw UsageError("mixture_error_sum requires reps >= 2");
    if (proc.design.n() != pair.n())
        throw UsageError("mixture_error_sum: design/pair size mismatch");

    std::vector<std::uint8_t> reject_null(reps), accept_alt(reps);
    parallel_for(reps, threads, [&](std::size_t r) {
        {
            rng::Stream stream = rng::substream(seed, 2 * r);
            const Intervention z = sample(proc.design, stream);
            const MixtureDraw draw = pair.draw(MixtureSide::Null, stream.u64());
            const std::vector<double> y = draw.evaluate(z);
            reject_null[r] = stream.bernoulli(proc.reject_prob(z, y)) ? 1 : 0;
        }
        {
            rng::Stream stream = rng::substream(seed, 2 * r + 1);
            const Intervention z = sample(proc.design, stream);
            const MixtureDraw draw = pair.draw(MixtureSide::Alt, stream.u64());
            const std::vector<double> y = draw.evaluate(z);
            accept_alt[r] = stream.bernoulli(proc.reject_prob(z, y)) ? 0 : 1;
        }
    });

    std::size_t rejects = 0, accepts = 0;
    for (std::size_t r = 0; r < reps; ++r) {
        rejects += reject_null[r];
        accepts += accept_alt[r];
    }
    const double n = static_cast<double>(reps);
    const double type1 = static_cast<double>(rejects) / n;
    const double type2 = static_cast<double>(accepts) / n;
    const double var = type1 * (1.0 - type1) / n + type2 * (1.0 - type2) / n;
    return {type1 + type2, std::sqrt(var)};
}

double mixture_error_sum_exact(const TestProcedure& proc, const MixturePair& pair, int cap) {
    if (proc.design.n() != pair.n())
        throw UsageError("mixture_error_sum_exact: design/pair size mismatch");
    require_enumerable(pair.n(), cap);
    double total = 0.0;
    enumerate_design(
        proc.design,
        [&](const Intervention& z, double design_prob) {
            const MarginalDist p0 = marginal_dist(pair, MixtureSide::Null, z).expanded(cap);
            const MarginalDist p1 = marginal_dist(pair, MixtureSide::Alt, z).expanded(cap);
            double term = 0.0;
            for (const auto& [y, prob] : p0.atoms()) term += prob * proc.reject_prob(z, y);
            for (const auto& [y, prob] : p1.atoms())
                term += prob * (1.0 - proc.reject_prob(z, y));
            total += design_prob * term;
        },
        cap);
    return total;
}

}  // namespace interference
