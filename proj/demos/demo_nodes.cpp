// Generates the (7, 23) node set, prints a summary, and writes the CSV
// table plus an SVG figure of the curve with its nodes into the current
// directory.

#include <cstdio>
#include <fstream>

#include "lcleb/lcleb.hpp"

int main() {
    using namespace lcleb;
    const DegreePair d = degree_pair(7, 23);
    const NodeSet ns = build_nodes(d);

    int classes[3] = {0, 0, 0};
    for (const Node& nd : ns.entries) ++classes[static_cast<int>(nd.cls)];
    std::printf("(%d,%d): %zu nodes, %d vertex / %d edge / %d interior\n", d.m, d.n,
                ns.entries.size(), classes[0], classes[1], classes[2]);
    std::printf("curve sampling reproduces the set: %s\n",
                curve_node_match(d) ? "yes" : "no");
    std::printf("first rows (k, l, u, v, weight):\n");
    for (int i = 0; i < 5; ++i) {
        const Node& nd = ns.entries[i];
        std::printf("  %d %2d  %+0.6f %+0.6f  %.6f\n", nd.k, nd.l, nd.u, nd.v, nd.weight);
    }

    {
        auto f = open_csv("lc_nodes_7_23.csv");
        write_nodes_csv(f, ns);
    }
    std::ofstream svg("lc_nodes_7_23.svg", std::ios::binary);
    svg << svg_nodes_figure(ns);
    std::printf("wrote lc_nodes_7_23.csv and lc_nodes_7_23.svg\n");
    return 0;
}
