#pragma once

#include <cstdint>
#include <random>

namespace interference::rng {

/// SplitMix64 finalizer. Serves as the seed mixer for substream derivation
/// and as the counter-based generator behind lazy mixture coefficients.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Substream seed for replication `index` under a master seed. Replications
/// with distinct indices get independent streams; no global RNG state exists.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    return splitmix64(master ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

/// Deterministic 64-bit value keyed by (seed, a, b, c).
constexpr std::uint64_t keyed_u64(std::uint64_t seed, std::uint64_t a, std::uint64_t b,
                                  std::uint64_t c) {
    std::uint64_t h = splitmix64(seed ^ 0x8f1bbcdcbfa53e0bULL);
    h = splitmix64(h ^ splitmix64(a + 0xd6e8feb86659fd93ULL));
    h = splitmix64(h ^ splitmix64(b + 0xa5cb3b1ed3a58cbcULL));
    h = splitmix64(h ^ splitmix64(c + 0x2545f4914f6cdd1dULL));
    return h;
}

/// Uniform sign in {-1, +1} keyed by (seed, a, b, c).
constexpr double keyed_sign(std::uint64_t seed, std::uint64_t a, std::uint64_t b,
                            std::uint64_t c) {
    return (keyed_u64(seed, a, b, c) >> 63) ? -1.0 : 1.0;
}

/// Seeded random stream. mt19937_64 is fully specified by the standard;
/// the distributions are hand-rolled because std:: distributions are not,
/// keeping output byte-identical across platforms.
class Stream {
  public:
    explicit Stream(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t u64() { return gen_(); }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(u64() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform01() < p; }

    /// Unbiased integer in [0, bound), bound >= 1, by rejection.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % bound;
        std::uint64_t x = u64();
        while (x >= limit) x = u64();
        return x % bound;
    }

  private:
    std::mt19937_64 gen_;
};

inline Stream substream(std::uint64_t master, std::uint64_t index) {
    return Stream(derive_seed(master, index));
}

}  // namespace interference::rng
