#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "interference/enumeration.hpp"
#include "interference/intervention.hpp"
#include "interference/network.hpp"

namespace interference {

enum class ExposureFamily {
    NoEffect,               // single constant exposure
    OwnTreatment,           // exposure = own treatment bit
    Stratified,             // exposure = (own bit, number of treated neighbors)
    ArbitraryNeighborhood,  // exposure = treatments restricted to {i} u N(i)
    Tabulated,              // explicit per-unit map over all of Omega
};

/// A collection of per-unit exposure mappings chi_i : {0,1}^n -> exposure ids.
///
/// Ids are dense integers per unit. Encodings (a repo convention, any
/// bijection would serve):
///   NoEffect              id = 0
///   OwnTreatment          id = z_i
///   Stratified            id = 2*t + z_i with t = number of treated neighbors
///   ArbitraryNeighborhood id = bitmask of z over the sorted list {i} u N(i)
class ExposureSpec {
  public:
    static ExposureSpec no_effect(std::size_t n);
    static ExposureSpec own_treatment(std::size_t n);
    static ExposureSpec stratified(std::shared_ptr<const Network> net);
    static ExposureSpec arbitrary_neighborhood(std::shared_ptr<const Network> net);

    /// Explicit tables: table[unit][z.to_mask()] = exposure id, id < sizes[unit].
    static ExposureSpec tabulated(std::vector<std::vector<std::uint32_t>> table,
                                  std::vector<std::uint32_t> sizes);

    /// Materializes any spec into a Tabulated one by enumerating Omega.
    static ExposureSpec tabulated_from(const ExposureSpec& spec,
                                       int cap = kDefaultEnumerationCap);

    ExposureFamily family() const { return family_; }
    std::size_t n() const { return n_; }

    /// |E_i|: 1, 2, 2(d_i+1), 2^(d_i+1), or the tabulated size.
    std::uint32_t exposure_count(std::size_t unit) const;

    /// Units whose treatment bits can influence this unit's exposure.
    std::vector<std::size_t> support(std::size_t unit) const;

    /// Null unless the family needs a network.
    const std::shared_ptr<const Network>& network() const { return network_; }

    /// Tabulated only: table()[unit][z.to_mask()] is the exposure id.
    const std::vector<std::vector<std::uint32_t>>& table() const { return table_; }

    std::string family_name() const;

  private:
    ExposureSpec() = default;

    ExposureFamily family_ = ExposureFamily::NoEffect;
    std::size_t n_ = 0;
    std::shared_ptr<const Network> network_;
    std::vector<std::vector<std::uint32_t>> table_;  // Tabulated only
    std::vector<std::uint32_t> table_sizes_;
};

std::uint32_t exposure_of(const ExposureSpec& spec, std::size_t unit, const Intervention& z);

/// Potential outcome model parameterized on an exposure spec:
/// y_i(z) = coeffs[i][chi_i(z)]. Coefficients live in [-1, 1]; the
/// constructor rejects violations rather than clamping.
class ExposureOutcomeModel {
  public:
    ExposureOutcomeModel(ExposureSpec spec, std::vector<std::vector<double>> coeffs);

    const ExposureSpec& spec() const { return spec_; }
    const std::vector<std::vector<double>>& coeffs() const { return coeffs_; }
    std::size_t n() const { return spec_.n(); }

    double outcome(std::size_t unit, const Intervention& z) const {
        return coeffs_[unit][exposure_of(spec_, unit, z)];
    }

  private:
    ExposureSpec spec_;
    std::vector<std::vector<double>> coeffs_;
};

std::vector<double> evaluate_outcomes(const ExposureOutcomeModel& model, const Intervention& z);

}  // namespace interference
