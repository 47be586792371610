// Interpolates a smooth function on the (5, 6) node set, reports the error
// away from the nodes, and prints the interpolation Lebesgue constant with
// its achieved argmax.

#include <cmath>
#include <cstdio>
#include <map>

#include "lcleb/lcleb.hpp"

int main() {
    using namespace lcleb;
    const NodeSet ns = build_nodes(degree_pair(5, 6));
    auto f = [](double u, double v) { return std::exp(u) * std::sin(2.0 * v - 0.5); };

    std::map<std::pair<int, int>, double> samples;
    for (const Node& nd : ns.entries) samples[{nd.k, nd.l}] = f(nd.u, nd.v);
    const Interpolant p = interpolate(ns, samples);

    double node_err = 0.0;
    for (const Node& nd : ns.entries)
        node_err = std::max(node_err, std::abs(evaluate(p, nd.u, nd.v) - f(nd.u, nd.v)));

    Rng rng(1);
    double grid_err = 0.0;
    for (int i = 0; i < 500; ++i) {
        const double u = rng.uniform(-1, 1), v = rng.uniform(-1, 1);
        grid_err = std::max(grid_err, std::abs(evaluate(p, u, v) - f(u, v)));
    }

    std::printf("(5,6): %zu nodes, %zu coefficients\n", ns.entries.size(), p.coeffs.size());
    std::printf("max error at the nodes:    %.3e\n", node_err);
    std::printf("max error off the nodes:   %.3e\n", grid_err);

    const SupResult leb = lebesgue_constant_lc(ns);
    std::printf("Lebesgue constant %.6f at (u, v) = (%.4f, %.4f)\n", leb.value,
                std::cos(leb.x), std::cos(leb.y));
    return 0;
}
