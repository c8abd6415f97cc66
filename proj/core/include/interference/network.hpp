#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace interference {

/// Undirected simple graph over units 0..n-1. Immutable after construction;
/// neighbor lists are sorted and duplicate-free.
class Network {
  public:
    /// Builds from an edge set; edges are symmetrized and deduplicated.
    /// Throws DataError on self-loops or indices >= n.
    Network(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

    std::size_t n() const { return adjacency_.size(); }
    const std::vector<std::size_t>& neighbors(std::size_t i) const { return adjacency_[i]; }
    std::size_t degree(std::size_t i) const { return adjacency_[i].size(); }
    std::size_t max_degree() const { return d_max_; }
    std::size_t edge_count() const { return edge_count_; }

    /// Units with degree below `bound`.
    std::vector<std::size_t> units_with_degree_below(std::size_t bound) const;

  private:
    std::vector<std::vector<std::size_t>> adjacency_;
    std::size_t d_max_ = 0;
    std::size_t edge_count_ = 0;
};

/// Parses edge-list text: one "u v" pair per line, 0-based indices,
/// '#' comments and blank lines ignored. Unit count is max index + 1 unless
/// `expected_n` > 0. Throws DataError with the line number on bad input.
Network load_network(std::string_view text, std::size_t expected_n = 0);

Network load_network_file(const std::string& path, std::size_t expected_n = 0);

/// Edge-list text for a network, one "u v" line per edge, u < v.
std::string to_edge_list(const Network& net);

/// Simple k-regular graph from the pairing model with whole-graph retries.
/// Deterministic given the seed. Throws UsageError when n*k is odd or
/// k >= n, DataError when the retry budget is exhausted.
Network gen_k_regular(std::size_t n, std::size_t k, std::uint64_t seed);

}  // namespace interference
