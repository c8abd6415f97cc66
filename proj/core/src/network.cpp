#include "interference/network.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "interference/errors.hpp"
#include "interference/rng.hpp"

namespace interference {

Network::Network(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    adjacency_.resize(n);
    for (const auto& [u, v] : edges) {
        if (u >= n || v >= n)
            throw DataError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                            ") out of range for n = " + std::to_string(n));
        if (u == v) throw DataError("self-loop at unit " + std::to_string(u));
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }
    for (auto& list : adjacency_) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        d_max_ = std::max(d_max_, list.size());
        edge_count_ += list.size();
    }
    edge_count_ /= 2;
}

std::vector<std::size_t> Network::units_with_degree_below(std::size_t bound) const {
    std::vector<std::size_t> units;
    for (std::size_t i = 0; i < n(); ++i)
        if (degree(i) < bound) units.push_back(i);
    return units;
}

namespace {

bool parse_index(std::string_view token, std::size_t& out) {
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last;
}

}  // namespace

Network load_network(std::string_view text, std::size_t expected_n) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::size_t max_index = 0;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        std::istringstream fields{std::string(line)};
        std::string a, b, extra;
        fields >> a >> b;
        if (a.empty()) continue;  // blank or comment-only line
        const bool trailing = static_cast<bool>(fields >> extra);
        std::size_t u = 0, v = 0;
        if (b.empty() || trailing || !parse_index(a, u) || !parse_index(b, v))
            throw DataError("malformed edge at line " + std::to_string(line_no));
        if (u == v) throw DataError("self-loop at line " + std::to_string(line_no));
        if (expected_n > 0 && (u >= expected_n || v >= expected_n))
            throw DataError("index out of range at line " + std::to_string(line_no));
        max_index = std::max({max_index, u, v});
        edges.emplace_back(u, v);
    }
    if (edges.empty()) throw DataError("edge list is empty");
    const std::size_t n = expected_n > 0 ? expected_n : max_index + 1;
    return Network(n, edges);
}

Network load_network_file(const std::string& path, std::size_t expected_n) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open network file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return load_network(buffer.str(), expected_n);
}

std::string to_edge_list(const Network& net) {
    std::ostringstream out;
    for (std::size_t u = 0; u < net.n(); ++u)
        for (std::size_t v : net.neighbors(u))
            if (u < v) out << u << ' ' << v << '\n';
    return out.str();
}

Network gen_k_regular(std::size_t n, std::size_t k, std::uint64_t seed) {
    if (k >= n) throw UsageError("k-regular graph requires k < n");
    if ((n * k) % 2 != 0) throw UsageError("k-regular graph requires n*k even");
    if (k == 0) return Network(n, {});

    // Pairing model: k half-edge stubs per unit, matched uniformly; any
    // pairing with self-loops or parallel edges restarts the attempt.
    constexpr int kMaxAttempts = 10000;
    std::vector<std::size_t> stubs(n * k);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < k; ++j) stubs[i * k + j] = i;

    rng::Stream stream(rng::derive_seed(seed, 0x6b2d6e67));
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        // Fisher-Yates with our own bounded draws for cross-platform determinism.
        for (std::size_t i = stubs.size() - 1; i > 0; --i)
            std::swap(stubs[i], stubs[stream.below(i + 1)]);

        std::vector<std::pair<std::size_t, std::size_t>> edges;
        edges.reserve(stubs.size() / 2);
        std::vector<std::vector<std::size_t>> seen(n);
        bool simple = true;
        for (std::size_t i = 0; i + 1 < stubs.size() && simple; i += 2) {
            const std::size_t u = stubs[i];
            const std::size_t v = stubs[i + 1];
            if (u == v) {
                simple = false;
                break;
            }
            auto& row = seen[std::min(u, v)];
            if (std::find(row.begin(), row.end(), std::max(u, v)) != row.end()) {
                simple = false;
                break;
            }
            row.push_back(std::max(u, v));
            edges.emplace_back(u, v);
        }
        if (simple) return Network(n, edges);
    }
    throw DataError("k-regular generation failed: retry budget exhausted for n = " +
                    std::to_string(n) + ", k = " + std::to_string(k));
}

}  // namespace interference
