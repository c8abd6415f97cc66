#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "interference/exposure.hpp"
#include "interference/intervention.hpp"

namespace interference {

/// Two interventions mapped to the same fine exposure but different coarse
/// exposures for `unit`, disproving the refinement.
struct RefinementWitness {
    std::size_t unit;
    Intervention z;
    Intervention z_alt;
};

/// Whether a fine spec refines a coarse one, with the per-unit refinement
/// maps, split sets, and split counts when it does.
struct RefinementReport {
    bool is_refinement = false;
    std::optional<RefinementWitness> witness;

    /// Per unit: fine exposure id -> coarse exposure id. Unrealized fine ids
    /// (possible only for tabulated specs) hold kUnrealized.
    std::vector<std::vector<std::uint32_t>> to_coarse;

    /// Per unit: coarse exposure id -> realized fine ids in its split set,
    /// ascending.
    std::vector<std::vector<std::vector<std::uint32_t>>> split_sets;

    /// Per unit: fine exposure id -> position inside its split set.
    std::vector<std::vector<std::uint32_t>> split_position;

    /// S_i: number of coarse exposures whose split set has more than one
    /// element.
    std::vector<std::uint32_t> split_counts;

    /// S_avg = (1/n) sum_i S_i.
    double s_avg = 0.0;

    static constexpr std::uint32_t kUnrealized = 0xffffffffu;
};

/// Verifies chi_coarse = pi o chi_fine unit by unit. Structured spec pairs
/// are checked by enumerating each unit's local support; tabulated specs
/// (or oversized local supports) fall back to enumerating Omega, which
/// requires n <= cap.
RefinementReport check_refinement(const ExposureSpec& coarse, const ExposureSpec& fine,
                                  int cap = kDefaultEnumerationCap);

}  // namespace interference
