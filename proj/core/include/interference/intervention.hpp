#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace interference {

/// Binary treatment vector z in {0,1}^n.
struct Intervention {
    std::vector<std::uint8_t> bits;

    Intervention() = default;
    explicit Intervention(std::size_t n) : bits(n, 0) {}

    /// Intervention whose bit i equals bit i of `mask`; requires n <= 64.
    static Intervention from_mask(std::size_t n, std::uint64_t mask) {
        Intervention z(n);
        for (std::size_t i = 0; i < n; ++i) z.bits[i] = (mask >> i) & 1u;
        return z;
    }

    std::uint64_t to_mask() const {
        std::uint64_t mask = 0;
        for (std::size_t i = 0; i < bits.size(); ++i)
            if (bits[i]) mask |= std::uint64_t{1} << i;
        return mask;
    }

    std::size_t size() const { return bits.size(); }
    std::uint8_t operator[](std::size_t i) const { return bits[i]; }
    std::uint8_t& operator[](std::size_t i) { return bits[i]; }
    bool operator==(const Intervention&) const = default;
};

}  // namespace interference
