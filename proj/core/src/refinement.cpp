#include "interference/refinement.hpp"

#include <algorithm>

#include "interference/errors.hpp"

namespace interference {

namespace {

constexpr std::uint32_t kUnset = RefinementReport::kUnrealized;

// Local supports beyond this many units fall back to global enumeration.
constexpr std::size_t kLocalSupportCap = 22;

struct UnitMap {
    std::vector<std::uint32_t> to_coarse;
    std::optional<RefinementWitness> witness;
};

// Builds the fine -> coarse map for one unit by visiting `domain`:
// either local assignments over the unit's support or all of Omega.
template <typename Visitor>
UnitMap map_unit(const ExposureSpec& coarse, const ExposureSpec& fine, std::size_t unit,
                 Visitor&& visit) {
    UnitMap result;
    result.to_coarse.assign(fine.exposure_count(unit), kUnset);
    std::vector<Intervention> first_seen(fine.exposure_count(unit));

    visit([&](const Intervention& z) {
        if (result.witness) return;
        const std::uint32_t f = exposure_of(fine, unit, z);
        const std::uint32_t c = exposure_of(coarse, unit, z);
        if (result.to_coarse[f] == kUnset) {
            result.to_coarse[f] = c;
            first_seen[f] = z;
        } else if (result.to_coarse[f] != c) {
            result.witness = RefinementWitness{unit, first_seen[f], z};
        }
    });
    return result;
}

}  // namespace

RefinementReport check_refinement(const ExposureSpec& coarse, const ExposureSpec& fine, int cap) {
    if (coarse.n() != fine.n())
        throw UsageError("check_refinement: specs have different unit counts");
    const std::size_t n = coarse.n();

    const bool tabulated = coarse.family() == ExposureFamily::Tabulated ||
                           fine.family() == ExposureFamily::Tabulated;

    RefinementReport report;
    report.to_coarse.resize(n);
    report.split_sets.resize(n);
    report.split_position.resize(n);
    report.split_counts.resize(n, 0);

    for (std::size_t unit = 0; unit < n; ++unit) {
        // Joint support of the two exposure mappings for this unit.
        std::vector<std::size_t> support = coarse.support(unit);
        {
            std::vector<std::size_t> fs = fine.support(unit);
            support.insert(support.end(), fs.begin(), fs.end());
            std::sort(support.begin(), support.end());
            support.erase(std::unique(support.begin(), support.end()), support.end());
        }

        UnitMap unit_map;
        if (!tabulated && support.size() <= kLocalSupportCap) {
            unit_map = map_unit(coarse, fine, unit, [&](auto&& fn) {
                Intervention z(n);
                const std::uint64_t total = std::uint64_t{1} << support.size();
                for (std::uint64_t mask = 0; mask < total; ++mask) {
                    for (std::size_t k = 0; k < support.size(); ++k)
                        z.bits[support[k]] = (mask >> k) & 1u;
                    fn(z);
                }
            });
        } else {
            require_enumerable(n, cap);
            unit_map = map_unit(coarse, fine, unit, [&](auto&& fn) {
                for_each_intervention(
                    n, [&](const Intervention& z, std::uint64_t) { fn(z); }, cap);
            });
        }

        if (unit_map.witness) {
            RefinementReport failed;
            failed.is_refinement = false;
            failed.witness = std::move(unit_map.witness);
            return failed;
        }

        auto& sets = report.split_sets[unit];
        sets.assign(coarse.exposure_count(unit), {});
        auto& positions = report.split_position[unit];
        positions.assign(fine.exposure_count(unit), kUnset);
        for (std::uint32_t f = 0; f < unit_map.to_coarse.size(); ++f) {
            const std::uint32_t c = unit_map.to_coarse[f];
            if (c == kUnset) continue;  // tabulated id never realized
            positions[f] = static_cast<std::uint32_t>(sets[c].size());
            sets[c].push_back(f);
        }
        for (const auto& split : sets)
            if (split.size() > 1) ++report.split_counts[unit];
        report.to_coarse[unit] = std::move(unit_map.to_coarse);
    }

    report.is_refinement = true;
    double total = 0.0;
    for (std::uint32_t s : report.split_counts) total += s;
    report.s_avg = n > 0 ? total / static_cast<double>(n) : 0.0;
    return report;
}

}  // namespace interference
