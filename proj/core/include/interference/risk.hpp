#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "interference/exposure.hpp"
#include "interference/lim_model.hpp"
#include "interference/lim_test.hpp"
#include "interference/test_procedure.hpp"

namespace interference {

/// A potential outcome function as a callable, z -> y(z).
using OutcomeFn = std::function<std::vector<double>(const Intervention&)>;

OutcomeFn outcome_fn(ExposureOutcomeModel model);
OutcomeFn outcome_fn(LimModel model);

/// Outcome function tagged with a label and its separation value g.
struct LabeledOutcome {
    std::string label;
    OutcomeFn fn;
    double separation = 0.0;
};

struct RiskEstimate {
    Estimate type1;     // max rejection rate over the supplied null models
    Estimate type2;     // max acceptance rate over the supplied alternatives
    double overall;     // type1 + type2; a lower bound on the worst case
    std::size_t reps;   // 0 when exact
    bool exact = false;
};

/// E_{z~D}[ phi(z, y(z)) ] by Monte Carlo, with binomial standard error.
Estimate rejection_rate_mc(const TestProcedure& proc, const OutcomeFn& model, std::size_t reps,
                           std::uint64_t seed, int threads = 1);

/// The same expectation by full enumeration of the design (n <= cap).
double rejection_rate_exact(const TestProcedure& proc, const OutcomeFn& model,
                            int cap = kDefaultEnumerationCap);

/// Worst-case errors over explicit adversarial model lists. Every
/// alternative must carry separation >= delta; the result is a certified
/// lower bound on the sup-based overall testing error.
RiskEstimate risk_profile(const TestProcedure& proc, const std::vector<LabeledOutcome>& nulls,
                          const std::vector<LabeledOutcome>& alts, double delta,
                          std::size_t reps, std::uint64_t seed, int threads = 1);

RiskEstimate risk_profile_exact(const TestProcedure& proc,
                                const std::vector<LabeledOutcome>& nulls,
                                const std::vector<LabeledOutcome>& alts, double delta,
                                int cap = kDefaultEnumerationCap);

/// Baseline procedures. never_reject and coin_flip discard the data;
/// the difference-in-means tests are the naive comparisons that the
/// adversarial mixtures defeat.
TestProcedure never_reject(Design design);
TestProcedure coin_flip(Design design, double q);
TestProcedure diff_in_means_own(Design design);
TestProcedure diff_in_means_neighbor(Design design, std::shared_ptr<const Network> net);

/// The LIM threshold test as a procedure.
TestProcedure lim_threshold_test(Design design, std::shared_ptr<const Network> net, double p,
                                 ThresholdVariant variant = ThresholdVariant::Main);

/// never-reject, coin-flip(0.05), coin-flip(0.5), diff-in-means by own
/// treatment, and (when a network is supplied) diff-in-means by neighbor
/// treatment.
std::vector<TestProcedure> baseline_tests(const Design& design,
                                          std::shared_ptr<const Network> net = nullptr);

/// Null models for the LIM testing problem: the zero model, SUTVA
/// coefficient-cube vertices, and one seeded random-sign SUTVA draw.
std::vector<LabeledOutcome> standard_lim_nulls(std::shared_ptr<const Network> net,
                                               std::uint64_t seed);

struct RegularGraphGen {
    std::size_t k;
};

struct CurveRow {
    std::size_t n;
    double delta;
    Estimate type1;
    Estimate type2;
    double overall;
    std::size_t reps;
    std::uint64_t seed;
};

/// Estimated overall error of the LIM threshold procedure across sample
/// sizes, one row per n (ascending as given). delta above the trivial
/// boundary 4, or an alternative with separation below delta, is a usage
/// error.
std::vector<CurveRow> consistency_curve(
    const RegularGraphGen& gen, const std::vector<std::size_t>& n_list, double delta,
    const std::function<LimModel(std::shared_ptr<const Network>)>& alt_builder, double p,
    std::size_t reps, std::uint64_t seed, int threads = 1);

}  // namespace interference
