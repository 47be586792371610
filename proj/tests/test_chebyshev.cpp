#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "lcleb/chebyshev.hpp"
#include "lcleb/errors.hpp"
#include "lcleb/util.hpp"

using namespace lcleb;

TEST_CASE("cgl points are the cosine grid, strictly decreasing") {
    const AngleGrid g = cgl_points(5);
    REQUIRE(g.points.size() == 6);
    REQUIRE(g.points.front() == 1.0);
    REQUIRE(g.points.back() == -1.0);
    for (std::size_t i = 1; i < g.points.size(); ++i)
        REQUIRE(g.points[i] < g.points[i - 1]);
    for (int k = 0; k <= 5; ++k)
        REQUIRE(std::abs(g.points[k] - std::cos(k * pi / 5)) < 1e-15);
    REQUIRE_THROWS_AS(cgl_points(0), degree_error);
}

TEST_CASE("normalized basis values") {
    REQUIRE(cheb_eval(0, 0.3) == 1.0);
    REQUIRE(std::abs(cheb_eval(1, 0.5) - sqrt2 * 0.5) < 1e-15);
    // angle form and algebraic form agree
    for (int n = 0; n <= 7; ++n)
        for (double u : {-0.9, -0.2, 0.0, 0.7, 1.0})
            REQUIRE(std::abs(cheb_eval(n, u) - cheb_eval_angle(n, std::acos(u))) < 1e-14);
    REQUIRE_THROWS_AS(cheb_eval(2, 1.0001), domain_error);
    REQUIRE_THROWS_AS(cheb_eval(-1, 0.0), degree_error);
}

TEST_CASE("orthonormality under the arc measure") {
    // (1/pi) integral over [0,pi] of C_i(cos t) C_j(cos t) dt = delta_ij
    const GaussRule g = gauss_legendre(4);
    std::vector<double> ts, ws;
    composite_axis(0.0, pi, 64, g, ts, ws);
    for (int i = 0; i <= 5; ++i)
        for (int j = 0; j <= 5; ++j) {
            Accumulator acc;
            for (std::size_t q = 0; q < ts.size(); ++q)
                acc.add(ws[q] * cheb_eval_angle(i, ts[q]) * cheb_eval_angle(j, ts[q]));
            const double want = i == j ? 1.0 : 0.0;
            REQUIRE(std::abs(acc.value() / pi - want) < 1e-12);
        }
}

TEST_CASE("gauss rule integrates polynomials to machine precision") {
    const GaussRule g = gauss_legendre(4);
    REQUIRE(g.nodes.size() == 4);
    // degree 7 is exact for a 4-point rule
    double acc = 0.0;
    for (std::size_t i = 0; i < 4; ++i)
        acc += g.weights[i] * std::pow(g.nodes[i], 6);
    REQUIRE(std::abs(acc - 2.0 / 7.0) < 1e-14);
    double wsum = 0.0;
    for (double w : g.weights) wsum += w;
    REQUIRE(std::abs(wsum - 2.0) < 1e-14);
}
