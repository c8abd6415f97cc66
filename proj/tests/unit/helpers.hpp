#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "interference/design.hpp"
#include "interference/lim_test.hpp"
#include "interference/network.hpp"

namespace testutil {

inline std::shared_ptr<const interference::Network> net_from_edges(
    std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    return std::make_shared<const interference::Network>(n, edges);
}

inline std::shared_ptr<const interference::Network> path(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return net_from_edges(n, edges);
}

inline std::shared_ptr<const interference::Network> cycle(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return net_from_edges(n, edges);
}

// Cycle over units 0..n-2 with unit n-1 pendant on unit 0: exactly one
// degree-1 unit.
inline std::shared_ptr<const interference::Network> pendant_cycle(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i + 1 < n - 1; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(n - 2, 0);
    edges.emplace_back(0, n - 1);
    return net_from_edges(n, edges);
}

// E_{z~Bernoulli(p)}[ g_hat(z) ] for a fixed outcome function, by full
// enumeration.
template <typename OutcomesOf>
double exact_expected_g_hat(const interference::Network& net, double p, OutcomesOf&& outcomes_of) {
    double expectation = 0.0;
    interference::enumerate_design(
        interference::Design::bernoulli(net.n(), p),
        [&](const interference::Intervention& z, double prob) {
            const std::vector<double> y = outcomes_of(z);
            expectation += prob * interference::estimate_separation(net, z, y, p);
        });
    return expectation;
}

}  // namespace testutil
