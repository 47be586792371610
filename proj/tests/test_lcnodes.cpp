#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <map>
#include <utility>

#include "lcleb/lcnodes.hpp"

using namespace lcleb;

TEST_CASE("degree pair decomposition and coprimality") {
    const DegreePair d = degree_pair(7, 23);
    REQUIRE(d.lambda == 3);
    REQUIRE(d.p == 2);
    REQUIRE(d.coprime);
    REQUIRE_FALSE(degree_pair(6, 9).coprime);
    REQUIRE_THROWS_AS(degree_pair(0, 3), degree_error);
    REQUIRE_THROWS_AS(build_nodes(degree_pair(2, 4)), coprime_error);
    REQUIRE_THROWS_AS(index_set(degree_pair(6, 9)), coprime_error);
}

TEST_CASE("node count, classes and weights for (2,3)") {
    const NodeSet ns = build_nodes(degree_pair(2, 3));
    REQUIRE(ns.entries.size() == 6); // (m+1)(n+1)/2

    std::map<std::pair<int, int>, const Node*> by_index;
    for (const Node& nd : ns.entries) {
        REQUIRE((nd.k + nd.l) % 2 == 0);
        by_index[{nd.k, nd.l}] = &nd;
    }
    REQUIRE(by_index.count({0, 0}));
    REQUIRE(by_index.count({1, 1}));
    REQUIRE(by_index.count({1, 3}));
    REQUIRE(by_index.at({0, 0})->cls == NodeClass::vertex);
    REQUIRE(by_index.at({0, 2})->cls == NodeClass::edge);
    REQUIRE(by_index.at({1, 1})->cls == NodeClass::interior);
    REQUIRE(by_index.at({1, 3})->cls == NodeClass::edge);
    REQUIRE(by_index.at({0, 0})->weight == 0.5 / 6.0);
    REQUIRE(by_index.at({0, 2})->weight == 1.0 / 6.0);
    REQUIRE(by_index.at({1, 1})->weight == 2.0 / 6.0);

    double wsum = 0.0;
    for (const Node& nd : ns.entries) wsum += nd.weight;
    REQUIRE(std::abs(wsum - 1.0) < 1e-15);

    // coordinates are the cosine grid
    REQUIRE(std::abs(by_index.at({1, 1})->u - std::cos(pi / 2)) < 1e-15);
    REQUIRE(std::abs(by_index.at({1, 1})->v - std::cos(pi / 3)) < 1e-15);
}

TEST_CASE("node counts across sizes; weights always sum to 1") {
    for (auto [m, n] : {std::pair{3, 4}, {5, 6}, {4, 9}, {7, 23}}) {
        const NodeSet ns = build_nodes(degree_pair(m, n));
        REQUIRE(static_cast<int>(ns.entries.size()) == (m + 1) * (n + 1) / 2);
        double wsum = 0.0;
        for (const Node& nd : ns.entries) wsum += nd.weight;
        REQUIRE(std::abs(wsum - 1.0) < 1e-13);
    }
    // (n, n+1) matches the triangular count (n+1)(n+2)/2
    const NodeSet padua = build_nodes(degree_pair(3, 4));
    REQUIRE(padua.entries.size() == 10);
}

TEST_CASE("sampling the curve reproduces the node set") {
    REQUIRE(curve_node_match(degree_pair(2, 3)));
    REQUIRE(curve_node_match(degree_pair(3, 4)));
    REQUIRE(curve_node_match(degree_pair(5, 6)));
    REQUIRE(curve_node_match(degree_pair(7, 23)));
    const auto p0 = lissajous_point(degree_pair(2, 3), 0.0);
    REQUIRE(p0.first == 1.0);
    REQUIRE(p0.second == 1.0);
}

TEST_CASE("spectral set is square with the node set") {
    for (auto [m, n] : {std::pair{2, 3}, {3, 4}, {5, 6}, {4, 9}, {7, 23}}) {
        const DegreePair d = degree_pair(m, n);
        const SpectralSet s = spectral_set(d);
        REQUIRE(s.pairs.size() == build_nodes(d).entries.size());
        // the augmenting index appears exactly once
        int extra = 0;
        for (const auto& [i, j] : s.pairs) {
            REQUIRE(static_cast<long long>(i) * n + static_cast<long long>(j) * m <=
                    static_cast<long long>(m) * n);
            if (i == 0 && j == n) ++extra;
        }
        REQUIRE(extra == 1);
    }
}
