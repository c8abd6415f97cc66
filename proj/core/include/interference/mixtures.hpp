#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "interference/design.hpp"
#include "interference/exposure.hpp"
#include "interference/marginal.hpp"
#include "interference/refinement.hpp"
#include "interference/test_procedure.hpp"

namespace interference {

enum class MixtureSide { Null, Alt };

class MixturePair;

/// One potential outcome function drawn from a mixture. Coefficients come
/// from a counter RNG keyed by (draw seed, unit, exposure id), so
/// arbitrary-neighborhood coefficient tables are never materialized.
/// Holds a reference to its pair, which must outlive the draw.
class MixtureDraw {
  public:
    double coefficient(std::size_t unit, std::uint32_t exposure_id) const;
    double outcome(std::size_t unit, const Intervention& z) const;
    std::vector<double> evaluate(const Intervention& z) const;

    /// Dense model for this draw; intended for small exposure sets.
    ExposureOutcomeModel materialize() const;

    const ExposureSpec& spec() const;

  private:
    friend class MixturePair;
    MixtureDraw(const MixturePair* pair, MixtureSide side, std::uint64_t seed)
        : pair_(pair), side_(side), seed_(seed) {}

    const MixturePair* pair_;
    MixtureSide side_;
    std::uint64_t seed_;
};

/// Adversarial mixture pair over a nested exposure-model pair.
///
/// Null draws put an independent uniform sign on every coarse coefficient.
/// Alternative draws pick, independently per (unit, coarse exposure), a
/// uniform sign s and set the split-set coefficient block to s*v with
/// v = (+1, -1, ..., -1) over the split set (ascending fine ids). Every
/// alternative draw attains the maximal separation 4*S_avg, yet for any
/// fixed intervention the observed outcome vector is uniform over
/// {-1,+1}^n under both mixtures.
class MixturePair {
  public:
    MixtureDraw draw(MixtureSide side, std::uint64_t seed) const {
        return MixtureDraw(this, side, seed);
    }

    /// Materialized draw, matching the lazy path coefficient for coefficient.
    ExposureOutcomeModel draw_model(MixtureSide side, std::uint64_t seed) const {
        return draw(side, seed).materialize();
    }

    std::size_t n() const { return coarse_.n(); }
    const ExposureSpec& coarse() const { return coarse_; }
    const ExposureSpec& fine() const { return fine_; }
    const RefinementReport& report() const { return *report_; }

    /// Testing hook: forces all alternative-draw coefficients of `unit`
    /// to +1, making that coordinate a point mass so the pair becomes
    /// distinguishable.
    MixturePair with_forced_alt_unit(std::size_t unit) const;

    bool alt_unit_forced(std::size_t unit) const;

  private:
    friend MixturePair sutva_mixtures(std::size_t n);
    friend MixturePair general_mixtures(ExposureSpec coarse, ExposureSpec fine,
                                        RefinementReport report);
    friend class MixtureDraw;

    enum class Kind { Sutva, General };

    MixturePair(Kind kind, ExposureSpec coarse, ExposureSpec fine,
                std::shared_ptr<const RefinementReport> report)
        : kind_(kind),
          coarse_(std::move(coarse)),
          fine_(std::move(fine)),
          report_(std::move(report)) {}

    Kind kind_;
    ExposureSpec coarse_;
    ExposureSpec fine_;
    std::shared_ptr<const RefinementReport> report_;
    std::vector<std::size_t> forced_alt_units_;  // sorted
};

/// The no-effect vs own-treatment construction: alpha uniform over
/// {-1,+1}^n under the null, and beta_1 = -beta_0 under the alternative.
MixturePair sutva_mixtures(std::size_t n);

/// The general construction for any verified refinement.
MixturePair general_mixtures(ExposureSpec coarse, ExposureSpec fine, RefinementReport report);

/// Exact law of y(z) under one side of the pair. Always factorized with
/// independent two-point coordinates; free-sign coordinates are uniform,
/// forced coordinates are point masses.
MarginalDist marginal_dist(const MixturePair& pair, MixtureSide side, const Intervention& z);

/// Le Cam bound: 1 - E_{z~D}[ TV(P0^z, P1^z) ], computed exactly.
double risk_lower_bound(const MixturePair& pair, const Design& design,
                        int cap = kDefaultEnumerationCap);

/// Monte Carlo estimate of E_{mu0} E_z[phi] + E_{mu1} E_z[1 - phi].
Estimate mixture_error_sum(const TestProcedure& proc, const MixturePair& pair, std::size_t reps,
                           std::uint64_t seed, int threads = 1);

/// The same error sum by full enumeration over the design and the exact
/// marginal supports. Requires n <= cap.
double mixture_error_sum_exact(const TestProcedure& proc, const MixturePair& pair,
                               int cap = kDefaultEnumerationCap);

}  // namespace interference
