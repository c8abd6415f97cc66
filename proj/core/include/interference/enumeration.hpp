#pragma once

#include <cstdint>
#include <utility>

#include "interference/errors.hpp"
#include "interference/intervention.hpp"

namespace interference {

/// Exact operations enumerate all 2^n interventions and refuse larger n.
inline constexpr int kDefaultEnumerationCap = 20;

inline void require_enumerable(std::size_t n, int cap = kDefaultEnumerationCap) {
    if (n > static_cast<std::size_t>(cap))
        throw UsageError("exact enumeration requires n <= " + std::to_string(cap) +
                         ", got n = " + std::to_string(n));
}

/// Visits all 2^n interventions in mask order, reusing one buffer.
/// fn receives (const Intervention&, mask).
template <typename Fn>
void for_each_intervention(std::size_t n, Fn&& fn, int cap = kDefaultEnumerationCap) {
    require_enumerable(n, cap);
    Intervention z(n);
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        for (std::size_t i = 0; i < n; ++i) z.bits[i] = (mask >> i) & 1u;
        fn(std::as_const(z), mask);
    }
}

}  // namespace interference
