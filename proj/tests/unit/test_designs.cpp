#include <doctest.h>

#include <cmath>
#include <map>

#include "interference/design.hpp"
#include "interference/errors.hpp"

using namespace interference;

TEST_CASE("bernoulli sampling matches the law of large numbers") {
    const Design design = Design::bernoulli(1, 0.5);
    rng::Stream stream(12345);
    const std::size_t reps = 100000;
    std::size_t treated = 0;
    for (std::size_t r = 0; r < reps; ++r) treated += sample(design, stream)[0];
    const double fraction = static_cast<double>(treated) / static_cast<double>(reps);
    CHECK(std::abs(fraction - 0.5) < 3.0 * std::sqrt(0.25 / static_cast<double>(reps)));
}

TEST_CASE("degenerate explicit design always returns its atom") {
    Intervention z0 = Intervention::from_mask(3, 0b101);
    const Design design = Design::explicit_finite({{z0, 1.0}});
    rng::Stream stream(9);
    for (int i = 0; i < 20; ++i) CHECK(sample(design, stream) == z0);
}

TEST_CASE("sampling is deterministic given the seed") {
    const Design design = Design::bernoulli(16, 0.5);
    rng::Stream a(777), b(777);
    for (int i = 0; i < 50; ++i) CHECK(sample(design, a) == sample(design, b));
}

TEST_CASE("enumerate bernoulli(0.5) at n=2 gives four quarter-probability atoms") {
    const Design design = Design::bernoulli(2, 0.5);
    std::map<std::uint64_t, double> probs;
    enumerate_design(design, [&](const Intervention& z, double p) { probs[z.to_mask()] = p; });
    REQUIRE(probs.size() == 4);
    for (const auto& [mask, p] : probs) CHECK(p == doctest::Approx(0.25).epsilon(1e-14));
}

TEST_CASE("enumerate bernoulli(0.25) at n=1") {
    std::map<std::uint64_t, double> probs;
    enumerate_design(Design::bernoulli(1, 0.25),
                     [&](const Intervention& z, double p) { probs[z.to_mask()] = p; });
    CHECK(probs.at(0) == doctest::Approx(0.75).epsilon(1e-14));
    CHECK(probs.at(1) == doctest::Approx(0.25).epsilon(1e-14));
}

TEST_CASE("enumerated probabilities are coordinate products and sum to one") {
    double all_ones = 0.0;
    double total = 0.0;
    enumerate_design(Design::bernoulli(3, 0.3), [&](const Intervention& z, double p) {
        total += p;
        if (z.to_mask() == 0b111) all_ones = p;
    });
    CHECK(std::abs(all_ones - 0.027) < 1e-12);
    CHECK(std::abs(total - 1.0) < 1e-12);

    double total12 = 0.0;
    enumerate_design(Design::bernoulli(12, 0.3), [&](const Intervention&, double p) { total12 += p; });
    CHECK(std::abs(total12 - 1.0) < 1e-12);
}

TEST_CASE("empirical coordinate means and correlations match (p, 0)") {
    const std::size_t n = 32;
    const double p = 0.3;
    const Design design = Design::bernoulli(n, p);
    rng::Stream stream(2024);
    const std::size_t reps = 20000;
    std::vector<double> mean(n, 0.0);
    double cross01 = 0.0, cross17 = 0.0;
    for (std::size_t r = 0; r < reps; ++r) {
        const Intervention z = sample(design, stream);
        for (std::size_t i = 0; i < n; ++i) mean[i] += z[i];
        cross01 += z[0] * z[1];
        cross17 += z[1] * z[7];
    }
    const double se_mean = std::sqrt(p * (1 - p) / static_cast<double>(reps));
    for (std::size_t i = 0; i < n; ++i)
        CHECK(std::abs(mean[i] / static_cast<double>(reps) - p) < 4.0 * se_mean);
    // Cov(z_a, z_b) estimated via E[z_a z_b] - p^2.
    const double se_cross = std::sqrt(0.25 / static_cast<double>(reps));
    CHECK(std::abs(cross01 / static_cast<double>(reps) - p * p) < 4.0 * se_cross);
    CHECK(std::abs(cross17 / static_cast<double>(reps) - p * p) < 4.0 * se_cross);
}

TEST_CASE("design validation") {
    CHECK_THROWS_AS(Design::bernoulli(4, 0.0), UsageError);
    CHECK_THROWS_AS(Design::bernoulli(4, 1.0), UsageError);
    CHECK_THROWS_AS(Design::bernoulli(0, 0.5), UsageError);
    CHECK_THROWS_AS(Design::explicit_finite({{Intervention(2), 0.5}}), UsageError);
    CHECK_THROWS_AS(Design::explicit_finite({{Intervention(2), -0.2}, {Intervention(2), 1.2}}),
                    UsageError);
    CHECK_THROWS_AS(
        enumerate_design(Design::bernoulli(21, 0.5), [](const Intervention&, double) {}),
        UsageError);
}

TEST_CASE("design string syntax") {
    const Design design = parse_design("bernoulli:0.25", 8);
    CHECK(design.kind() == Design::Kind::Bernoulli);
    CHECK(design.n() == 8);
    CHECK(design.p() == 0.25);
    CHECK_THROWS_AS(parse_design("uniform:3", 8), UsageError);
    CHECK_THROWS_AS(parse_design("bernoulli:abc", 8), UsageError);
    CHECK_THROWS_AS(parse_design("bernoulli:0.5x", 8), UsageError);
}
