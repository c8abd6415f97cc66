#include "interference/exposure.hpp"

#include <algorithm>
#include <cmath>

#include "interference/errors.hpp"

namespace interference {

ExposureSpec ExposureSpec::no_effect(std::size_t n) {
    ExposureSpec spec;
    spec.family_ = ExposureFamily::NoEffect;
    spec.n_ = n;
    return spec;
}

ExposureSpec ExposureSpec::own_treatment(std::size_t n) {
    ExposureSpec spec;
    spec.family_ = ExposureFamily::OwnTreatment;
    spec.n_ = n;
    return spec;
}

ExposureSpec ExposureSpec::stratified(std::shared_ptr<const Network> net) {
    if (!net) throw UsageError("stratified exposure spec requires a network");
    ExposureSpec spec;
    spec.family_ = ExposureFamily::Stratified;
    spec.n_ = net->n();
    spec.network_ = std::move(net);
    return spec;
}

ExposureSpec ExposureSpec::arbitrary_neighborhood(std::shared_ptr<const Network> net) {
    if (!net) throw UsageError("arbitrary-neighborhood exposure spec requires a network");
    ExposureSpec spec;
    spec.family_ = ExposureFamily::ArbitraryNeighborhood;
    spec.n_ = net->n();
    spec.network_ = std::move(net);
    return spec;
}

ExposureSpec ExposureSpec::tabulated(std::vector<std::vector<std::uint32_t>> table,
                                     std::vector<std::uint32_t> sizes) {
    if (table.size() != sizes.size()) throw UsageError("tabulated spec: table/sizes mismatch");
    const std::size_t n = table.size();
    require_enumerable(n);
    const std::size_t omega = std::size_t{1} << n;
    for (std::size_t i = 0; i < n; ++i) {
        if (table[i].size() != omega)
            throw UsageError("tabulated spec: unit " + std::to_string(i) +
                             " map is not total over Omega");
        for (std::uint32_t id : table[i])
            if (id >= sizes[i])
                throw UsageError("tabulated spec: exposure id out of range for unit " +
                                 std::to_string(i));
    }
    ExposureSpec spec;
    spec.family_ = ExposureFamily::Tabulated;
    spec.n_ = n;
    spec.table_ = std::move(table);
    spec.table_sizes_ = std::move(sizes);
    return spec;
}

ExposureSpec ExposureSpec::tabulated_from(const ExposureSpec& source, int cap) {
    require_enumerable(source.n(), cap);
    const std::size_t n = source.n();
    std::vector<std::vector<std::uint32_t>> table(n);
    std::vector<std::uint32_t> sizes(n);
    for (std::size_t i = 0; i < n; ++i) {
        table[i].resize(std::size_t{1} << n);
        sizes[i] = source.exposure_count(i);
    }
    for_each_intervention(
        n,
        [&](const Intervention& z, std::uint64_t mask) {
            for (std::size_t i = 0; i < n; ++i) table[i][mask] = exposure_of(source, i, z);
        },
        cap);
    return tabulated(std::move(table), std::move(sizes));
}

std::uint32_t ExposureSpec::exposure_count(std::size_t unit) const {
    switch (family_) {
        case ExposureFamily::NoEffect:
            return 1;
        case ExposureFamily::OwnTreatment:
            return 2;
        case ExposureFamily::Stratified:
            return 2 * (static_cast<std::uint32_t>(network_->degree(unit)) + 1);
        case ExposureFamily::ArbitraryNeighborhood: {
            const std::size_t d = network_->degree(unit);
            if (d + 1 > 31)
                throw UsageError("arbitrary-neighborhood exposure set overflows at degree " +
                                 std::to_string(d));
            return std::uint32_t{1} << (d + 1);
        }
        case ExposureFamily::Tabulated:
            return table_sizes_[unit];
    }
    throw UsageError("unknown exposure family");
}

std::vector<std::size_t> ExposureSpec::support(std::size_t unit) const {
    switch (family_) {
        case ExposureFamily::NoEffect:
            return {};
        case ExposureFamily::OwnTreatment:
            return {unit};
        case ExposureFamily::Stratified:
        case ExposureFamily::ArbitraryNeighborhood: {
            std::vector<std::size_t> s = network_->neighbors(unit);
            s.insert(std::lower_bound(s.begin(), s.end(), unit), unit);
            return s;
        }
        case ExposureFamily::Tabulated: {
            std::vector<std::size_t> s(n_);
            for (std::size_t i = 0; i < n_; ++i) s[i] = i;
            return s;
        }
    }
    throw UsageError("unknown exposure family");
}

std::string ExposureSpec::family_name() const {
    switch (family_) {
        case ExposureFamily::NoEffect:
            return "no-effect";
        case ExposureFamily::OwnTreatment:
            return "own-treatment";
        case ExposureFamily::Stratified:
            return "stratified";
        case ExposureFamily::ArbitraryNeighborhood:
            return "arbitrary";
        case ExposureFamily::Tabulated:
            return "tabulated";
    }
    return "unknown";
}

std::uint32_t exposure_of(const ExposureSpec& spec, std::size_t unit, const Intervention& z) {
    if (unit >= spec.n()) throw UsageError("exposure_of: unit index out of range");
    if (z.size() != spec.n()) throw UsageError("exposure_of: intervention length mismatch");
    switch (spec.family()) {
        case ExposureFamily::NoEffect:
            return 0;
        case ExposureFamily::OwnTreatment:
            return z[unit];
        case ExposureFamily::Stratified: {
            std::uint32_t treated = 0;
            for (std::size_t j : spec.network()->neighbors(unit)) treated += z[j];
            return 2 * treated + z[unit];
        }
        case ExposureFamily::ArbitraryNeighborhood: {
            const std::vector<std::size_t> s = spec.support(unit);
            std::uint32_t id = 0;
            for (std::size_t k = 0; k < s.size(); ++k)
                if (z[s[k]]) id |= std::uint32_t{1} << k;
            return id;
        }
        case ExposureFamily::Tabulated:
            return spec.table()[unit][z.to_mask()];
    }
    throw UsageError("unknown exposure family");
}

ExposureOutcomeModel::ExposureOutcomeModel(ExposureSpec spec,
                                           std::vector<std::vector<double>> coeffs)
    : spec_(std::move(spec)), coeffs_(std::move(coeffs)) {
    constexpr double kBoundTol = 1e-12;
    if (coeffs_.size() != spec_.n())
        throw UsageError("coefficient table has " + std::to_string(coeffs_.size()) +
                         " rows for n = " + std::to_string(spec_.n()));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].size() != spec_.exposure_count(i))
            throw UsageError("coefficient row " + std::to_string(i) +
                             " does not match the exposure-set size");
        for (double c : coeffs_[i])
            if (!std::isfinite(c) || std::abs(c) > 1.0 + kBoundTol)
                throw UsageError("coefficient " + std::to_string(c) + " for unit " +
                                 std::to_string(i) + " violates the uniform bound |y| <= 1");
    }
}

std::vector<double> evaluate_outcomes(const ExposureOutcomeModel& model, const Intervention& z) {
    std::vector<double> y(model.n());
    for (std::size_t i = 0; i < y.size(); ++i) y[i] = model.outcome(i, z);
    return y;
}

}  // namespace interference
