#pragma once

#include <map>
#include <vector>

#include "interference/enumeration.hpp"

namespace interference {

/// Exact law of an observed outcome vector.
///
/// FactorizedSigns: independent coordinates supported on {-1, +1};
/// prob_plus[i] = P(y_i = +1). FiniteSupport: explicit atoms.
class MarginalDist {
  public:
    enum class Kind { FactorizedSigns, FiniteSupport };

    static MarginalDist factorized_signs(std::vector<double> prob_plus);
    static MarginalDist finite_support(std::map<std::vector<double>, double> atoms);

    Kind kind() const { return kind_; }
    std::size_t n() const { return n_; }
    const std::vector<double>& prob_plus() const { return prob_plus_; }
    const std::map<std::vector<double>, double>& atoms() const { return atoms_; }

    /// Expands a factorized law into its full 2^n-atom support (n <= cap).
    MarginalDist expanded(int cap = kDefaultEnumerationCap) const;

  private:
    MarginalDist() = default;

    Kind kind_ = Kind::FactorizedSigns;
    std::size_t n_ = 0;
    std::vector<double> prob_plus_;
    std::map<std::vector<double>, double> atoms_;
};

/// Exact total variation distance, i.e. half the L1 distance on a common
/// support. Factorized pairs are expanded when n <= cap; beyond the cap
/// they are compared by coordinate-law equality (two product measures are
/// equal iff all coordinate laws are equal), which throws UsageError when
/// the laws differ and the exact value is therefore not enumerable.
double tv_distance(const MarginalDist& p, const MarginalDist& q,
                   int cap = kDefaultEnumerationCap);

}  // namespace interference
