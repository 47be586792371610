// Interpolation on Lissajous-Chebyshev node sets: coefficient transform,
// fundamental polynomials, evaluation, and the interpolation Lebesgue
// constant by factored grid search.
#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>
#include <vector>

#include "lcleb/chebyshev.hpp"
#include "lcleb/errors.hpp"
#include "lcleb/lcnodes.hpp"
#include "lcleb/norms.hpp"
#include "lcleb/util.hpp"

namespace lcleb {

struct Interpolant {
    DegreePair degrees;
    std::map<std::pair<int, int>, double> coeffs; // (i, j) -> c_ij over the spectral set
};

// c_ij = sum over nodes of weight * sample * C_i(u_k) * C_j(v_l)
inline Interpolant interpolate(const NodeSet& nodes,
                               const std::map<std::pair<int, int>, double>& samples) {
    if (samples.size() != nodes.entries.size())
        throw spec_error("interpolate: sample count does not match the node set");
    Interpolant out;
    out.degrees = nodes.degrees;
    const SpectralSet gamma = spectral_set(nodes.degrees);
    const int m = nodes.degrees.m, n = nodes.degrees.n;
    for (const auto& [i, j] : gamma.pairs) {
        Accumulator acc;
        for (const Node& nd : nodes.entries) {
            const auto it = samples.find({nd.k, nd.l});
            if (it == samples.end())
                throw spec_error("interpolate: missing sample at a node index");
            acc.add(nd.weight * it->second * cheb_eval_angle(i, pi * nd.k / m) *
                    cheb_eval_angle(j, pi * nd.l / n));
        }
        out.coeffs[{i, j}] = acc.value();
    }
    return out;
}

// P(u, v) = sum c_ij C_i(u) C_j(v) - (1/2) c_{0,n} C_n(v)
inline double evaluate(const Interpolant& p, double u, double v) {
    if (std::abs(u) > 1.0 || std::abs(v) > 1.0)
        throw domain_error("evaluate: point outside [-1,1]^2");
    const double tx = std::acos(u), ty = std::acos(v);
    Accumulator acc;
    for (const auto& [ij, c] : p.coeffs)
        acc.add(c * cheb_eval_angle(ij.first, tx) * cheb_eval_angle(ij.second, ty));
    acc.add(-0.5 * p.coeffs.at({0, p.degrees.n}) * cheb_eval_angle(p.degrees.n, ty));
    return acc.value();
}

// fundamental polynomial of the node with index (k, l), evaluated at (u, v);
// it is 1 at that node and 0 at every other node of the set
inline double fundamental(const NodeSet& nodes, int k, int l, double u, double v) {
    if (std::abs(u) > 1.0 || std::abs(v) > 1.0)
        throw domain_error("fundamental: point outside [-1,1]^2");
    const Node* at = nullptr;
    for (const Node& nd : nodes.entries)
        if (nd.k == k && nd.l == l) { at = &nd; break; }
    if (!at) throw spec_error("fundamental: (k, l) is not a node index of this set");
    const int m = nodes.degrees.m, n = nodes.degrees.n;
    const SpectralSet gamma = spectral_set(nodes.degrees);
    const double tk = pi * k / m, tl = pi * l / n;
    const double tx = std::acos(u), ty = std::acos(v);
    Accumulator acc;
    for (const auto& [i, j] : gamma.pairs) {
        const double scale = (i == 0 && j == n) ? 0.5 : 1.0;
        acc.add(scale * cheb_eval_angle(i, tk) * cheb_eval_angle(j, tl) *
                cheb_eval_angle(i, tx) * cheb_eval_angle(j, ty));
    }
    return at->weight * acc.value();
}

namespace detail {

// B[node][col] = weight * C_i(u_k) * C_j(v_l), the (0, n) column at half
// strength; the Lebesgue function is sum over nodes of |row . c(x, y)| where
// c factors as C_i(x) C_j(y) over the spectral set
struct LcTables {
    int m, n;
    std::vector<std::pair<int, int>> gamma;
    std::size_t nodes_count;
    std::vector<double> B; // nodes_count x gamma.size()

    explicit LcTables(const NodeSet& nodes)
        : m(nodes.degrees.m), n(nodes.degrees.n) {
        gamma = spectral_set(nodes.degrees).pairs;
        nodes_count = nodes.entries.size();
        B.resize(nodes_count * gamma.size());
        for (std::size_t r = 0; r < nodes_count; ++r) {
            const Node& nd = nodes.entries[r];
            const double tk = pi * nd.k / m, tl = pi * nd.l / n;
            for (std::size_t c = 0; c < gamma.size(); ++c) {
                const auto [i, j] = gamma[c];
                const double scale = (i == 0 && j == n) ? 0.5 : 1.0;
                B[r * gamma.size() + c] =
                    scale * nd.weight * cheb_eval_angle(i, tk) * cheb_eval_angle(j, tl);
            }
        }
    }

    // collapse the y dependence: Ay[node][i] = sum_{(i,j) in gamma} B * C_j(y),
    // so that L(x, y) = sum_nodes |sum_i Ay[node][i] C_i(x)|
    void ycollapse(double ty, std::vector<double>& Ay) const {
        const std::size_t width = static_cast<std::size_t>(m) + 1;
        Ay.assign(nodes_count * width, 0.0);
        std::vector<double> cj(gamma.size());
        for (std::size_t c = 0; c < gamma.size(); ++c)
            cj[c] = cheb_eval_angle(gamma[c].second, ty);
        for (std::size_t r = 0; r < nodes_count; ++r) {
            const double* row = &B[r * gamma.size()];
            double* ay = &Ay[r * width];
            for (std::size_t c = 0; c < gamma.size(); ++c)
                ay[gamma[c].first] += row[c] * cj[c];
        }
    }

    double eval_row(const std::vector<double>& Ay, const std::vector<double>& ci) const {
        const std::size_t width = static_cast<std::size_t>(m) + 1;
        Accumulator acc;
        for (std::size_t r = 0; r < nodes_count; ++r) {
            const double* ay = &Ay[r * width];
            double v = 0.0;
            for (std::size_t i = 0; i < width; ++i)
                v += ay[i] * ci[i];
            acc.add(std::abs(v));
        }
        return acc.value();
    }

    double at(double tx, double ty) const {
        std::vector<double> Ay;
        ycollapse(ty, Ay);
        std::vector<double> ci(m + 1);
        for (int i = 0; i <= m; ++i)
            ci[i] = cheb_eval_angle(i, tx);
        return eval_row(Ay, ci);
    }
};

} // namespace detail

// sum over nodes of |fundamental polynomial| at (u, v)
inline double lebesgue_function_lc(const NodeSet& nodes, double u, double v) {
    if (std::abs(u) > 1.0 || std::abs(v) > 1.0)
        throw domain_error("lebesgue_function_lc: point outside [-1,1]^2");
    const detail::LcTables tab(nodes);
    return tab.at(std::acos(u), std::acos(v));
}

// sup of the Lebesgue function over [-1,1]^2, searched in angle coordinates
// on a grid aligned with the node angles (multiples of pi/(2m) and pi/(2n))
// plus local refinement; x, y of the result are angles, the point in the
// square is (cos x, cos y)
inline SupResult lebesgue_constant_lc(const NodeSet& nodes, SearchSpec search = {}) {
    const int m = nodes.degrees.m, n = nodes.degrees.n;
    if (search.grid_points_per_axis == 0) search = default_search_spec(m, n);
    validate_search(search, m, n);
    const auto aligned = [](int base, int per) { return per * ((base + per - 1) / per); };
    const int Nx = aligned(search.grid_points_per_axis, 2 * m);
    const int Ny = aligned(search.grid_points_per_axis, 2 * n);

    const detail::LcTables tab(nodes);
    const std::size_t width = static_cast<std::size_t>(m) + 1;
    std::vector<double> Ay;
    std::vector<double> ci(width);
    SupResult best{-1.0, 0.0, 0.0};
    for (int jy = 0; jy <= Ny; ++jy) {
        const double ty = pi * jy / Ny;
        tab.ycollapse(ty, Ay);
        for (int ix = 0; ix <= Nx; ++ix) {
            const double tx = pi * ix / Nx;
            for (std::size_t i = 0; i < width; ++i)
                ci[i] = cheb_eval_angle(static_cast<int>(i), tx);
            const double v = tab.eval_row(Ay, ci);
            if (v > best.value) best = {v, tx, ty};
        }
    }
    double hx = pi / Nx, hy = pi / Ny;
    const int pts = 2 * search.refinement_factor + 1;
    for (int r = 0; r < search.refinement_rounds; ++r) {
        const double x0 = std::max(0.0, best.x - hx), x1 = std::min(pi, best.x + hx);
        const double y0 = std::max(0.0, best.y - hy), y1 = std::min(pi, best.y + hy);
        for (int jy = 0; jy < pts; ++jy) {
            const double ty = y0 + (y1 - y0) * jy / (pts - 1);
            tab.ycollapse(ty, Ay);
            for (int ix = 0; ix < pts; ++ix) {
                const double tx = x0 + (x1 - x0) * ix / (pts - 1);
                for (std::size_t i = 0; i < width; ++i)
                    ci[i] = cheb_eval_angle(static_cast<int>(i), tx);
                const double v = tab.eval_row(Ay, ci);
                if (v > best.value) best = {v, tx, ty};
            }
        }
        hx = (x1 - x0) / (pts - 1);
        hy = (y1 - y0) / (pts - 1);
    }
    return best;
}

} // namespace lcleb
