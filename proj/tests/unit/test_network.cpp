#include <doctest.h>

#include "interference/errors.hpp"
#include "interference/network.hpp"

using namespace interference;

TEST_CASE("edge list parsing builds the expected topology") {
    const Network net = load_network("0 1\n1 2");
    CHECK(net.n() == 3);
    CHECK(net.degree(0) == 1);
    CHECK(net.degree(1) == 2);
    CHECK(net.degree(2) == 1);
    CHECK(net.max_degree() == 2);
    CHECK(net.edge_count() == 2);
}

TEST_CASE("duplicate edges collapse after symmetrization") {
    const Network net = load_network("0 1\n1 0");
    CHECK(net.n() == 2);
    CHECK(net.edge_count() == 1);
    CHECK(net.degree(0) == 1);
    CHECK(net.degree(1) == 1);
}

TEST_CASE("comments and blank lines are ignored") {
    const Network net = load_network("# header\n\n0 1  # trailing\n\n1 2\n");
    CHECK(net.n() == 3);
    CHECK(net.edge_count() == 2);
}

TEST_CASE("self-loops and malformed lines are rejected with line numbers") {
    CHECK_THROWS_WITH_AS(load_network("0 0"), doctest::Contains("line 1"), DataError);
    CHECK_THROWS_WITH_AS(load_network("0 1\n2 x"), doctest::Contains("line 2"), DataError);
    CHECK_THROWS_AS(load_network("0 1\n1 2 3"), DataError);
    CHECK_THROWS_AS(load_network("0 1\n-1 2"), DataError);
    CHECK_THROWS_AS(load_network(""), DataError);
}

TEST_CASE("explicit n bounds the indices") {
    CHECK_THROWS_AS(load_network("0 5", 3), DataError);
    const Network net = load_network("0 1", 5);
    CHECK(net.n() == 5);
    CHECK(net.degree(4) == 0);
}

TEST_CASE("edge list round trip") {
    const Network net = load_network("0 2\n2 1\n0 1");
    const Network again = load_network(to_edge_list(net));
    CHECK(again.n() == net.n());
    CHECK(again.edge_count() == net.edge_count());
    for (std::size_t i = 0; i < net.n(); ++i) CHECK(again.neighbors(i) == net.neighbors(i));
}

TEST_CASE("k-regular generation produces simple regular graphs") {
    for (std::uint64_t seed : {0ULL, 1ULL, 42ULL}) {
        const Network net = gen_k_regular(4, 2, seed);
        for (std::size_t i = 0; i < net.n(); ++i) {
            CHECK(net.degree(i) == 2);
            for (std::size_t j : net.neighbors(i)) CHECK(j != i);
        }
    }
    const Network big = gen_k_regular(100, 4, 7);
    CHECK(big.edge_count() == 200);
    for (std::size_t i = 0; i < big.n(); ++i) CHECK(big.degree(i) == 4);
}

TEST_CASE("k-regular generation is deterministic in the seed") {
    const Network a = gen_k_regular(6, 3, 1);
    const Network b = gen_k_regular(6, 3, 1);
    CHECK(to_edge_list(a) == to_edge_list(b));
    const Network c = gen_k_regular(6, 3, 2);
    // Different seeds almost surely give different graphs at this size; if
    // this ever flakes the seeds can be adjusted.
    CHECK(to_edge_list(a) != to_edge_list(c));
}

TEST_CASE("k-regular parity and range preconditions") {
    CHECK_THROWS_AS(gen_k_regular(5, 3, 0), UsageError);
    CHECK_THROWS_AS(gen_k_regular(4, 4, 0), UsageError);
}

TEST_CASE("degree-below query") {
    const Network net = load_network("0 1\n1 2\n2 3\n3 1");
    const auto low = net.units_with_degree_below(2);
    REQUIRE(low.size() == 1);
    CHECK(low[0] == 0);
}
