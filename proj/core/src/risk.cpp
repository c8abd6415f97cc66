#include "interference/risk.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <utility>

#include "interference/errors.hpp"
#include "interference/parallel.hpp"
#include "interference/rng.hpp"
#include "interference/separation.hpp"

namespace interference {

namespace {

double binomial_se(double rate, std::size_t reps) {
    return std::sqrt(rate * (1.0 - rate) / static_cast<double>(reps));
}

// Two-sample difference-in-means z test on a data-dependent split.
// Groups smaller than two units give no evidence; a zero standard error
// with distinct means counts as infinite evidence.
double diff_in_means_reject(const std::vector<double>& group_a,
                            const std::vector<double>& group_b) {
    constexpr double kCritical = 1.96;
    if (group_a.size() < 2 || group_b.size() < 2) return 0.0;
    auto mean_var = [](const std::vector<double>& v) {
        double mean = 0.0;
        for (double x : v) mean += x;
        mean /= static_cast<double>(v.size());
        double ss = 0.0;
        for (double x : v) ss += (x - mean) * (x - mean);
        return std::pair{mean, ss / static_cast<double>(v.size() - 1)};
    };
    const auto [mean_a, var_a] = mean_var(group_a);
    const auto [mean_b, var_b] = mean_var(group_b);
    const double se2 = var_a / static_cast<double>(group_a.size()) +
                       var_b / static_cast<double>(group_b.size());
    if (se2 == 0.0) return mean_a != mean_b ? 1.0 : 0.0;
    return std::abs(mean_a - mean_b) / std::sqrt(se2) >= kCritical ? 1.0 : 0.0;
}

void check_alternatives(const std::vector<LabeledOutcome>& alts, double delta) {
    if (alts.empty()) throw UsageError("risk_profile requires at least one alternative model");
    for (const LabeledOutcome& alt : alts)
        if (alt.separation < delta - 1e-12)
            throw UsageError("alternative '" + alt.label + "' has separation " +
                             std::to_string(alt.separation) + " below delta = " +
                             std::to_string(delta));
}

}  // namespace

OutcomeFn outcome_fn(ExposureOutcomeModel model) {
    return [m = std::move(model)](const Intervention& z) { return evaluate_outcomes(m, z); };
}

OutcomeFn outcome_fn(LimModel model) {
    return [m = std::move(model)](const Intervention& z) { return evaluate_outcomes(m, z); };
}

Estimate rejection_rate_mc(const TestProcedure& proc, const OutcomeFn& model, std::size_t reps,
                           std::uint64_t seed, int threads) {
    if (reps == 0) throw UsageError("rejection_rate_mc requires reps >= 1");
    std::vector<std::uint8_t> rejected(reps);
    parallel_for(reps, threads, [&](std::size_t r) {
        rng::Stream stream = rng::substream(seed, r);
        const Intervention z = sample(proc.design, stream);
        const std::vector<double> y = model(z);
        rejected[r] = stream.bernoulli(proc.reject_prob(z, y)) ? 1 : 0;
    });
    std::size_t count = 0;
    for (std::uint8_t bit : rejected) count += bit;
    const double rate = static_cast<double>(count) / static_cast<double>(reps);
    return {rate, binomial_se(rate, reps)};
}

double rejection_rate_exact(const TestProcedure& proc, const OutcomeFn& model, int cap) {
    double rate = 0.0;
    enumerate_design(
        proc.design,
        [&](const Intervention& z, double prob) { rate += prob * proc.reject_prob(z, model(z)); },
        cap);
    return rate;
}

RiskEstimate risk_profile(const TestProcedure& proc, const std::vector<LabeledOutcome>& nulls,
                          const std::vector<LabeledOutcome>& alts, double delta,
                          std::size_t reps, std::uint64_t seed, int threads) {
    check_alternatives(alts, delta);
    RiskEstimate estimate;
    estimate.reps = reps;
    estimate.exact = false;

    std::uint64_t model_index = 0;
    for (const LabeledOutcome& null : nulls) {
        const Estimate rate =
            rejection_rate_mc(proc, null.fn, reps, rng::derive_seed(seed, model_index++), threads);
        if (rate.point > estimate.type1.point) estimate.type1 = rate;
    }
    estimate.type2 = {0.0, 0.0};
    bool first = true;
    for (const LabeledOutcome& alt : alts) {
        const Estimate rate =
            rejection_rate_mc(proc, alt.fn, reps, rng::derive_seed(seed, model_index++), threads);
        const Estimate accept{1.0 - rate.point, rate.se};
        if (first || accept.point > estimate.type2.point) estimate.type2 = accept;
        first = false;
    }
    estimate.overall = estimate.type1.point + estimate.type2.point;
    return estimate;
}

RiskEstimate risk_profile_exact(const TestProcedure& proc,
                                const std::vector<LabeledOutcome>& nulls,
                                const std::vector<LabeledOutcome>& alts, double delta, int cap) {
    check_alternatives(alts, delta);
    RiskEstimate estimate;
    estimate.reps = 0;
    estimate.exact = true;
    for (const LabeledOutcome& null : nulls)
        estimate.type1.point = std::max(estimate.type1.point,
                                        rejection_rate_exact(proc, null.fn, cap));
    bool first = true;
    for (const LabeledOutcome& alt : alts) {
        const double accept = 1.0 - rejection_rate_exact(proc, alt.fn, cap);
        if (first || accept > estimate.type2.point) estimate.type2.point = accept;
        first = false;
    }
    estimate.overall = estimate.type1.point + estimate.type2.point;
    return estimate;
}

TestProcedure never_reject(Design design) {
    return {std::move(design),
            [](const Intervention&, std::span<const double>) { return 0.0; }, "never-reject"};
}

TestProcedure coin_flip(Design design, double q) {
    if (!(q >= 0.0 && q <= 1.0)) throw UsageError("coin_flip requires q in [0,1]");
    char label[32];
    std::snprintf(label, sizeof(label), "coin-flip:%g", q);
    return {std::move(design),
            [q](const Intervention&, std::span<const double>) { return q; }, label};
}

TestProcedure diff_in_means_own(Design design) {
    auto test = [](const Intervention& z, std::span<const double> y) {
        std::vector<double> treated, control;
        for (std::size_t i = 0; i < y.size(); ++i)
            (z[i] ? treated : control).push_back(y[i]);
        return diff_in_means_reject(treated, control);
    };
    return {std::move(design), test, "diff-means-own"};
}

TestProcedure diff_in_means_neighbor(Design design, std::shared_ptr<const Network> net) {
    if (!net) throw UsageError("diff_in_means_neighbor requires a network");
    auto test = [net = std::move(net)](const Intervention& z, std::span<const double> y) {
        std::vector<double> exposed, unexposed;
        for (std::size_t i = 0; i < y.size(); ++i) {
            bool any_treated = false;
            for (std::size_t j : net->neighbors(i))
                if (z[j]) {
                    any_treated = true;
                    break;
                }
            (any_treated ? exposed : unexposed).push_back(y[i]);
        }
        return diff_in_means_reject(exposed, unexposed);
    };
    return {std::move(design), test, "diff-means-neighbor"};
}

TestProcedure lim_threshold_test(Design design, std::shared_ptr<const Network> net, double p,
                                 ThresholdVariant variant) {
    if (!net) throw UsageError("lim_threshold_test requires a network");
    auto test = [net = std::move(net), p, variant](const Intervention& z,
                                                   std::span<const double> y) {
        return run_lim_test(*net, z, y, p, variant).reject ? 1.0 : 0.0;
    };
    return {std::move(design), test, "lim-threshold"};
}

std::vector<TestProcedure> baseline_tests(const Design& design,
                                          std::shared_ptr<const Network> net) {
    std::vector<TestProcedure> tests;
    tests.push_back(never_reject(design));
    tests.push_back(coin_flip(design, 0.05));
    tests.push_back(coin_flip(design, 0.5));
    tests.push_back(diff_in_means_own(design));
    if (net) tests.push_back(diff_in_means_neighbor(design, std::move(net)));
    return tests;
}

std::vector<LabeledOutcome> standard_lim_nulls(std::shared_ptr<const Network> net,
                                               std::uint64_t seed) {
    const std::size_t n = net->n();
    const ExposureSpec sutva = ExposureSpec::own_treatment(n);

    auto sutva_model = [&](double alpha0, double alpha1) {
        return ExposureOutcomeModel(sutva,
                                    std::vector<std::vector<double>>(n, {alpha0, alpha1}));
    };

    std::vector<LabeledOutcome> nulls;
    nulls.push_back({"lim-zero", outcome_fn(LimModel::uniform(net, {0.0, 0.0, 0.0})), 0.0});
    nulls.push_back({"sutva-const-plus", outcome_fn(sutva_model(1.0, 1.0)), 0.0});
    nulls.push_back({"sutva-sign-flip", outcome_fn(sutva_model(-1.0, 1.0)), 0.0});

    rng::Stream stream = rng::substream(seed, 0x5ca1ab1e);
    std::vector<std::vector<double>> random_coeffs(n);
    for (auto& row : random_coeffs) {
        row = {stream.bernoulli(0.5) ? 1.0 : -1.0, stream.bernoulli(0.5) ? 1.0 : -1.0};
    }
    nulls.push_back(
        {"sutva-random-signs",
         outcome_fn(ExposureOutcomeModel(sutva, std::move(random_coeffs))), 0.0});
    return nulls;
}

std::vector<CurveRow> consistency_curve(
    const RegularGraphGen& gen, const std::vector<std::size_t>& n_list, double delta,
    const std::function<LimModel(std::shared_ptr<const Network>)>& alt_builder, double p,
    std::size_t reps, std::uint64_t seed, int threads) {
    if (delta > 4.0)
        throw UsageError("delta = " + std::to_string(delta) +
                         " is a trivial separation value: the LIM alternative is empty beyond "
                         "max_g = 4");
    if (delta <= 0.0) throw UsageError("consistency_curve requires delta > 0");

    std::vector<std::size_t> sizes = n_list;
    std::sort(sizes.begin(), sizes.end());

    std::vector<CurveRow> rows;
    rows.reserve(sizes.size());
    for (std::size_t idx = 0; idx < sizes.size(); ++idx) {
        const std::size_t n = sizes[idx];
        auto net = std::make_shared<const Network>(
            gen_k_regular(n, gen.k, rng::derive_seed(seed, 0xc0ffee00 + idx)));

        LimModel alt = alt_builder(net);
        const double g = lim_separation(alt).g;
        if (g < delta - 1e-12)
            throw UsageError("alternative model has separation " + std::to_string(g) +
                             " below delta = " + std::to_string(delta));

        const TestProcedure proc =
            lim_threshold_test(Design::bernoulli(n, p), net, p, ThresholdVariant::Main);
        std::vector<LabeledOutcome> nulls = standard_lim_nulls(net, rng::derive_seed(seed, idx));
        std::vector<LabeledOutcome> alts;
        alts.push_back({"lim-alt", outcome_fn(std::move(alt)), g});

        const RiskEstimate estimate =
            risk_profile(proc, nulls, alts, delta, reps, rng::derive_seed(seed, 0xab1e00 + idx),
                         threads);
        rows.push_back({n, delta, estimate.type1, estimate.type2, estimate.overall, reps, seed});
    }
    return rows;
}

}  // namespace interference
