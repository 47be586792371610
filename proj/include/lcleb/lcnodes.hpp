// Lissajous curves, Lissajous-Chebyshev node sets with cubature weights,
// and the matching spectral index set.
#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "lcleb/chebyshev.hpp"
#include "lcleb/errors.hpp"
#include "lcleb/util.hpp"

namespace lcleb {

struct DegreePair {
    int m = 0;
    int n = 0;
    int lambda = 0; // n = lambda*m + p, 0 <= p < m
    int p = 0;
    bool coprime = false;
};

inline DegreePair degree_pair(int m, int n) {
    if (m < 1 || n < 1) throw degree_error("degree_pair: m, n must be >= 1");
    DegreePair d;
    d.m = m;
    d.n = n;
    d.lambda = n / m;
    d.p = n % m;
    d.coprime = gcd_ll(m, n) == 1;
    return d;
}

inline void require_coprime(const DegreePair& d, const char* op) {
    if (!d.coprime)
        throw coprime_error(std::string(op) + ": gcd(m, n) must be 1, got (" +
                            std::to_string(d.m) + ", " + std::to_string(d.n) + ")");
}

enum class NodeClass { vertex, edge, interior };

inline const char* node_class_name(NodeClass c) {
    switch (c) {
        case NodeClass::vertex: return "vertex";
        case NodeClass::edge: return "edge";
        default: return "interior";
    }
}

struct Node {
    int k = 0, l = 0;       // index pair, 0<=k<=m, 0<=l<=n, k+l even
    double u = 0, v = 0;    // (cos(k*pi/m), cos(l*pi/n))
    double weight = 0;
    NodeClass cls = NodeClass::interior;
};

struct NodeSet {
    DegreePair degrees;
    std::vector<Node> entries;
};

struct SpectralSet {
    DegreePair degrees;
    std::vector<std::pair<int, int>> pairs;
};

// point on the degenerate Lissajous curve: (cos(n t), cos(m t))
inline std::pair<double, double> lissajous_point(const DegreePair& d, double t) {
    return {std::cos(d.n * t), std::cos(d.m * t)};
}

inline std::vector<std::pair<int, int>> index_set(const DegreePair& d) {
    require_coprime(d, "index_set");
    std::vector<std::pair<int, int>> idx;
    idx.reserve(static_cast<std::size_t>(d.m + 1) * (d.n + 1) / 2);
    for (int k = 0; k <= d.m; ++k)
        for (int l = 0; l <= d.n; ++l)
            if ((k + l) % 2 == 0) idx.emplace_back(k, l);
    return idx;
}

inline NodeSet build_nodes(const DegreePair& d) {
    require_coprime(d, "build_nodes");
    NodeSet ns;
    ns.degrees = d;
    for (auto [k, l] : index_set(d)) {
        Node nd;
        nd.k = k;
        nd.l = l;
        nd.u = std::cos(k * pi / d.m);
        nd.v = std::cos(l * pi / d.n);
        const bool ub = (k == 0 || k == d.m);
        const bool vb = (l == 0 || l == d.n);
        if (ub && vb) {
            nd.cls = NodeClass::vertex;
            nd.weight = 0.5 / (static_cast<double>(d.m) * d.n);
        } else if (ub || vb) {
            nd.cls = NodeClass::edge;
            nd.weight = 1.0 / (static_cast<double>(d.m) * d.n);
        } else {
            nd.cls = NodeClass::interior;
            nd.weight = 2.0 / (static_cast<double>(d.m) * d.n);
        }
        ns.entries.push_back(nd);
    }
    return ns;
}

// true iff sampling the curve at t = pi*k/(m*n), k = 0..m*n, reproduces the
// index-generated node set (deduplication tolerance 1e-12)
inline bool curve_node_match(const DegreePair& d) {
    require_coprime(d, "curve_node_match");
    const NodeSet ns = build_nodes(d);
    const double tol = 1e-12;
    std::vector<std::pair<double, double>> sampled;
    for (int k = 0; k <= d.m * d.n; ++k) {
        auto pt = lissajous_point(d, pi * k / (d.m * d.n));
        bool seen = false;
        for (const auto& q : sampled)
            if (std::abs(q.first - pt.first) < tol && std::abs(q.second - pt.second) < tol) {
                seen = true;
                break;
            }
        if (!seen) sampled.push_back(pt);
    }
    if (sampled.size() != ns.entries.size()) return false;
    for (const auto& nd : ns.entries) {
        bool found = false;
        for (const auto& q : sampled)
            if (std::abs(q.first - nd.u) < tol && std::abs(q.second - nd.v) < tol) {
                found = true;
                break;
            }
        if (!found) return false;
    }
    return true;
}

inline SpectralSet spectral_set(const DegreePair& d) {
    require_coprime(d, "spectral_set");
    SpectralSet s;
    s.degrees = d;
    // i/m + j/n < 1, tested exactly as i*n + j*m < m*n, plus the extra (0, n)
    for (int i = 0; i <= d.m; ++i)
        for (int j = 0; j <= d.n; ++j)
            if (static_cast<long long>(i) * d.n + static_cast<long long>(j) * d.m <
                static_cast<long long>(d.m) * d.n)
                s.pairs.emplace_back(i, j);
    s.pairs.emplace_back(0, d.n);
    return s;
}

} // namespace lcleb
