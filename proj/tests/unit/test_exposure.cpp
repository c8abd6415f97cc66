#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "interference/enumeration.hpp"
#include "interference/errors.hpp"
#include "interference/exposure.hpp"
#include "interference/lim_model.hpp"
#include "interference/rng.hpp"

using namespace interference;

TEST_CASE("no-effect exposure is constant") {
    const ExposureSpec spec = ExposureSpec::no_effect(4);
    CHECK(spec.exposure_count(2) == 1);
    for_each_intervention(4, [&](const Intervention& z, std::uint64_t) {
        for (std::size_t i = 0; i < 4; ++i) CHECK(exposure_of(spec, i, z) == 0);
    });
}

TEST_CASE("own-treatment exposure tracks the unit's bit") {
    const ExposureSpec spec = ExposureSpec::own_treatment(3);
    CHECK(spec.exposure_count(0) == 2);
    Intervention z(3);
    z[1] = 1;
    CHECK(exposure_of(spec, 1, z) == 1);
    CHECK(exposure_of(spec, 0, z) == 0);
}

TEST_CASE("stratified exposure counts treated neighbors but not identity") {
    // Path 0-1-2-3; unit 1 has neighbors {0, 2}.
    const auto net = testutil::path(4);
    const ExposureSpec spec = ExposureSpec::stratified(net);
    CHECK(spec.exposure_count(1) == 2 * (2 + 1));
    CHECK(spec.exposure_count(0) == 2 * (1 + 1));

    Intervention a(4), b(4);
    a[0] = 1;  // one treated neighbor of unit 1
    b[2] = 1;  // the other neighbor instead
    CHECK(exposure_of(spec, 1, a) == exposure_of(spec, 1, b));

    // Encoding: id = 2t + z_i.
    Intervention c(4);
    c[0] = c[2] = 1;
    CHECK(exposure_of(spec, 1, c) == 4);
    c[1] = 1;
    CHECK(exposure_of(spec, 1, c) == 5);
}

TEST_CASE("arbitrary-neighborhood exposure distinguishes which neighbor is treated") {
    const auto net = testutil::path(4);
    const ExposureSpec spec = ExposureSpec::arbitrary_neighborhood(net);
    CHECK(spec.exposure_count(1) == 8);  // 2^(2+1)
    CHECK(spec.exposure_count(0) == 4);

    Intervention a(4), b(4);
    a[0] = 1;
    b[2] = 1;
    CHECK(exposure_of(spec, 1, a) != exposure_of(spec, 1, b));

    // Bitmask over the sorted list {0,1,2} for unit 1: bit 0 -> unit 0,
    // bit 1 -> unit 1, bit 2 -> unit 2.
    CHECK(exposure_of(spec, 1, a) == 1);
    CHECK(exposure_of(spec, 1, b) == 4);
    Intervention c(4);
    c[1] = 1;
    CHECK(exposure_of(spec, 1, c) == 2);
}

TEST_CASE("exposure ids stay within the advertised exposure-set size") {
    const auto net = testutil::cycle(5);
    for (const ExposureSpec& spec :
         {ExposureSpec::no_effect(5), ExposureSpec::own_treatment(5),
          ExposureSpec::stratified(net), ExposureSpec::arbitrary_neighborhood(net)}) {
        for_each_intervention(5, [&](const Intervention& z, std::uint64_t) {
            for (std::size_t i = 0; i < 5; ++i)
                CHECK(exposure_of(spec, i, z) < spec.exposure_count(i));
        });
    }
}

TEST_CASE("tabulated specs reproduce the structured mappings exactly") {
    const auto net = testutil::cycle(6);
    for (const ExposureSpec& spec :
         {ExposureSpec::no_effect(6), ExposureSpec::own_treatment(6),
          ExposureSpec::stratified(net), ExposureSpec::arbitrary_neighborhood(net)}) {
        const ExposureSpec tab = ExposureSpec::tabulated_from(spec);
        CHECK(tab.family() == ExposureFamily::Tabulated);
        for_each_intervention(6, [&](const Intervention& z, std::uint64_t) {
            for (std::size_t i = 0; i < 6; ++i)
                CHECK(exposure_of(tab, i, z) == exposure_of(spec, i, z));
        });
    }
}

TEST_CASE("outcomes are a function of the exposure") {
    // Permuting treatments among a unit's neighbors leaves a stratified
    // model's outcome unchanged.
    const auto net = testutil::cycle(6);
    const ExposureSpec spec = ExposureSpec::stratified(net);
    rng::Stream stream(5);
    std::vector<std::vector<double>> coeffs(6);
    for (std::size_t i = 0; i < 6; ++i) {
        coeffs[i].resize(spec.exposure_count(i));
        for (double& c : coeffs[i]) c = 2.0 * stream.uniform01() - 1.0;
    }
    const ExposureOutcomeModel model(spec, coeffs);

    Intervention z(6);
    z[1] = 1;  // unit 0's neighbors are {1, 5}
    Intervention w(6);
    w[5] = 1;
    CHECK(model.outcome(0, z) == model.outcome(0, w));
}

TEST_CASE("SUTVA model with alpha = (-1, +1) evaluates to 2z - 1") {
    const std::size_t n = 6;
    const ExposureOutcomeModel model(ExposureSpec::own_treatment(n),
                                     std::vector<std::vector<double>>(n, {-1.0, 1.0}));
    for_each_intervention(n, [&](const Intervention& z, std::uint64_t) {
        const std::vector<double> y = evaluate_outcomes(model, z);
        for (std::size_t i = 0; i < n; ++i) CHECK(y[i] == 2.0 * z[i] - 1.0);
    });
}

TEST_CASE("model construction enforces the uniform bound and table shape") {
    const ExposureSpec spec = ExposureSpec::own_treatment(2);
    CHECK_THROWS_AS(ExposureOutcomeModel(spec, {{1.5, 0.0}, {0.0, 0.0}}), UsageError);
    CHECK_THROWS_AS(ExposureOutcomeModel(spec, {{0.0}, {0.0, 0.0}}), UsageError);
    CHECK_THROWS_AS(ExposureOutcomeModel(spec, {{0.0, 0.0}}), UsageError);
}

TEST_CASE("linear-in-means evaluation at the extremes") {
    const auto net = testutil::cycle(5);
    const LimModel model = LimModel::uniform(net, {0.0, 0.0, 1.0});

    Intervention ones(5);
    for (auto& bit : ones.bits) bit = 1;
    for (double y : evaluate_outcomes(model, ones)) CHECK(y == 1.0);

    const Intervention zeros(5);
    for (double y : evaluate_outcomes(model, zeros)) CHECK(y == 0.0);
}

TEST_CASE("linear-in-means validation") {
    const auto net = testutil::cycle(5);
    // b3 = 2 forces b1 = -1, b2 = 0.
    CHECK_NOTHROW(LimModel::uniform(net, {-1.0, 0.0, 2.0}));
    CHECK_THROWS_AS(LimModel::uniform(net, {0.0, 0.0, 2.0}), UsageError);
    CHECK_THROWS_AS(LimModel::uniform(net, {-1.0, 0.5, 2.0}), UsageError);
    // |b3| <= 2 is forced by the corner bound whatever b1, b2 are.
    CHECK_THROWS_AS(LimModel::uniform(net, {-1.0, 0.0, 2.5}), UsageError);
    CHECK_THROWS_AS(LimModel::uniform(net, {0.5, 0.25, 0.5}), UsageError);
    CHECK_NOTHROW(LimModel::uniform(net, {0.25, 0.25, 0.5}));

    // Degree-0 units are rejected at construction.
    const auto lonely = testutil::net_from_edges(3, {{0, 1}});
    CHECK_THROWS_AS(LimModel::uniform(lonely, {0.0, 0.0, 0.5}), UsageError);
}
