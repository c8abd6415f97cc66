#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "interference/intervention.hpp"
#include "interference/network.hpp"

namespace interference {

/// First four raw moments of the treated-neighbor fraction T_i under a
/// Bernoulli(p) design for a unit of degree d, plus Var(T_i).
struct FractionMoments {
    double m1, m2, m3, m4;
    double var;  // m2 - m1^2 = p(1-p)/d
};

/// T_i(z) = |N(i)|^-1 sum_{j in N(i)} z_j for every unit.
/// Throws UsageError when any unit has degree 0.
std::vector<double> fraction_treated(const Network& net, const Intervention& z);

/// Closed-form moments. d*T_i is Binomial(d, p), giving
///   d   E[T]   = d p
///   d^2 E[T^2] = d p +   d(d-1) p^2
///   d^3 E[T^3] = d p + 3 d(d-1) p^2 +   d(d-1)(d-2) p^3
///   d^4 E[T^4] = d p + 7 d(d-1) p^2 + 6 d(d-1)(d-2) p^3 + d(d-1)(d-2)(d-3) p^4
FractionMoments fraction_moments(std::size_t degree, double p);

/// Brute-force moments averaged over all 2^d neighbor assignments; the
/// oracle against which the closed forms are verified.
FractionMoments fraction_moments_enumerated(std::size_t degree, double p);

/// Riesz weight
///   W = [Var(T)(T^2 - E[T^2]) - (E[T^3] - E[T^2]E[T])(T - E[T])]
///     / [Var(T)(E[T^4] - E[T^2]^2) - (E[T^3] - E[T^2]E[T])^2]
/// with E[W] = 0, E[TW] = 0, E[T^2 W] = 1 under the moment law. Throws
/// DegenerateWeightError when the denominator magnitude is <= 1e-12
/// (always the case at degree 1).
double weight_general(double t, const FractionMoments& m);

/// p = 1/2 closed form: W = 8 d^2 (1 - 1/d)^-1 [(T^2 - E[T^2]) - (T - E[T])].
/// Matches weight_general at p = 1/2; requires degree >= 2.
double weight_half(double t, std::size_t degree);

enum class ThresholdVariant {
    Main,     // tau = (d_max^5 / n)^(1/4)
    General,  // tau = (|T|/n v d_max^(5/2)/n^(1/2))^(1/2), T = units of degree < 2
};

double threshold(const Network& net, ThresholdVariant variant);

struct ErrorBounds {
    double variance_bound;  // 2^9 d_max^5 / n
    double rmse_bound;      // 2^5 (|T|/n v d_max^(5/2)/n^(1/2))
};

ErrorBounds error_bounds(const Network& net);

/// Separation estimator g_hat = (1/n) sum_{i not in T} W_i Y_i^2, where T is
/// the set of units with degree < 2 (their weight is zero). Outcomes must
/// satisfy |Y_i| <= 1 + 1e-9. p = 1/2 uses the closed-form weight; other p
/// use the general weight and throw DegenerateWeightError listing any
/// degrees whose denominator vanishes.
double estimate_separation(const Network& net, const Intervention& z,
                           std::span<const double> outcomes, double p);

struct LimTestResult {
    double g_hat = 0.0;
    double tau = 0.0;
    bool reject = false;                      // g_hat >= tau; the boundary rejects
    std::vector<std::size_t> excluded_units;  // T: units with degree < 2
    std::vector<double> weights;              // realized W_i, zero on excluded units
};

LimTestResult run_lim_test(const Network& net, const Intervention& z,
                           std::span<const double> outcomes, double p,
                           ThresholdVariant variant = ThresholdVariant::Main);

}  // namespace interference
