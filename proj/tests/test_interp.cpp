#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <map>
#include <utility>

#include "lcleb/interp.hpp"

using namespace lcleb;

namespace {

std::map<std::pair<int, int>, double> sample(const NodeSet& ns, double (*f)(double, double)) {
    std::map<std::pair<int, int>, double> s;
    for (const Node& nd : ns.entries) s[{nd.k, nd.l}] = f(nd.u, nd.v);
    return s;
}

} // namespace

TEST_CASE("fundamental polynomials have the Kronecker property") {
    for (auto [m, n] : {std::pair{2, 3}, {3, 4}}) {
        const NodeSet ns = build_nodes(degree_pair(m, n));
        for (const Node& a : ns.entries)
            for (const Node& b : ns.entries) {
                const double v = fundamental(ns, a.k, a.l, b.u, b.v);
                const double want = (a.k == b.k && a.l == b.l) ? 1.0 : 0.0;
                REQUIRE(std::abs(v - want) < 1e-12);
            }
    }
    const NodeSet ns = build_nodes(degree_pair(2, 3));
    REQUIRE_THROWS_AS(fundamental(ns, 1, 2, 0.0, 0.0), spec_error); // (1,2) has odd sum
    REQUIRE_THROWS_AS(fundamental(ns, 0, 0, 1.5, 0.0), domain_error);
}

TEST_CASE("interpolation matches samples at the nodes") {
    const NodeSet ns = build_nodes(degree_pair(3, 4));
    const auto s = sample(ns, [](double u, double v) { return std::exp(u) * std::sin(2 * v); });
    const Interpolant p = interpolate(ns, s);
    REQUIRE(p.coeffs.size() == ns.entries.size());
    for (const Node& nd : ns.entries)
        REQUIRE(std::abs(evaluate(p, nd.u, nd.v) - s.at({nd.k, nd.l})) < 1e-12);
}

TEST_CASE("polynomials inside the spectral set are reproduced exactly") {
    const NodeSet ns = build_nodes(degree_pair(2, 3));
    // f = C_1(u) C_1(v), an interior index of the spectral set
    const auto s = sample(ns, [](double u, double v) {
        return cheb_eval(1, u) * cheb_eval(1, v);
    });
    const Interpolant p = interpolate(ns, s);
    Rng rng(4);
    for (int trial = 0; trial < 30; ++trial) {
        const double u = rng.uniform(-1.0, 1.0), v = rng.uniform(-1.0, 1.0);
        REQUIRE(std::abs(evaluate(p, u, v) - cheb_eval(1, u) * cheb_eval(1, v)) < 1e-12);
    }
    // constants give a single unit coefficient
    const Interpolant c = interpolate(ns, sample(ns, [](double, double) { return 1.0; }));
    for (const auto& [ij, coeff] : c.coeffs) {
        const double want = (ij.first == 0 && ij.second == 0) ? 1.0 : 0.0;
        REQUIRE(std::abs(coeff - want) < 1e-14);
    }
}

TEST_CASE("interpolate validates its sample map") {
    const NodeSet ns = build_nodes(degree_pair(2, 3));
    auto s = sample(ns, [](double, double) { return 1.0; });
    s.erase({0, 0});
    REQUIRE_THROWS_AS(interpolate(ns, s), spec_error);
    s[{0, 1}] = 0.0; // wrong key, right count
    REQUIRE_THROWS_AS(interpolate(ns, s), spec_error);
}

TEST_CASE("lebesgue function: node values and the direct route") {
    const NodeSet ns = build_nodes(degree_pair(2, 3));
    // at a node the sum of |fundamental| is exactly 1
    for (const Node& nd : ns.entries)
        REQUIRE(std::abs(lebesgue_function_lc(ns, nd.u, nd.v) - 1.0) < 1e-12);
    // elsewhere it agrees with summing |fundamental| directly
    Rng rng(9);
    for (int trial = 0; trial < 15; ++trial) {
        const double u = rng.uniform(-1.0, 1.0), v = rng.uniform(-1.0, 1.0);
        double direct = 0.0;
        for (const Node& nd : ns.entries) direct += std::abs(fundamental(ns, nd.k, nd.l, u, v));
        REQUIRE(std::abs(lebesgue_function_lc(ns, u, v) - direct) < 1e-12);
    }
}

TEST_CASE("interpolation constant for the smallest pair") {
    // frozen against a dense independent grid evaluation
    const NodeSet ns = build_nodes(degree_pair(1, 2));
    const SupResult r = lebesgue_constant_lc(ns);
    REQUIRE(std::abs(r.value - 1.2499997943) < 1e-5);
    REQUIRE(r.value <= 1.2500000001);
    // the reported argmax achieves the reported value
    const double at = lebesgue_function_lc(ns, std::cos(r.x), std::cos(r.y));
    REQUIRE(std::abs(at - r.value) < 1e-12);
}

TEST_CASE("interpolation constant dominates the function and grows with size") {
    const NodeSet a = build_nodes(degree_pair(2, 3));
    const SupResult ra = lebesgue_constant_lc(a);
    Rng rng(6);
    for (int trial = 0; trial < 10; ++trial) {
        const double u = rng.uniform(-1.0, 1.0), v = rng.uniform(-1.0, 1.0);
        REQUIRE(lebesgue_function_lc(a, u, v) <= ra.value + 1e-9);
    }
    const SupResult rb = lebesgue_constant_lc(build_nodes(degree_pair(4, 5)));
    REQUIRE(rb.value > ra.value);
}
