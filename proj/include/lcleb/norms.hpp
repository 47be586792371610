// L1 norms of oscillatory kernels by composite Gauss-Legendre quadrature,
// discrete Lebesgue functions/constants over shifted grids, the averaged
// F-kernel supremum, and Marcinkiewicz-Zygmund sampling ratios.
#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "lcleb/errors.hpp"
#include "lcleb/kernels.hpp"
#include "lcleb/util.hpp"

namespace lcleb {

struct Rect {
    double x0 = 0.0, x1 = pi;
    double y0 = 0.0, y1 = pi;
};

struct QuadratureSpec {
    int cells_per_oscillation = 8;
    int gauss_order = 4;
    Rect domain{};
};

struct SearchSpec {
    int grid_points_per_axis = 0; // must be >= 4 * max(m, n)
    int refinement_rounds = 2;
    int refinement_factor = 8;
};

inline SearchSpec default_search_spec(int m, int n) {
    return {8 * std::max(m, n), 2, 8};
}

inline void validate_quad(const QuadratureSpec& q) {
    if (q.cells_per_oscillation < 1 || q.gauss_order < 1)
        throw spec_error("quadrature spec: cells_per_oscillation and gauss_order must be >= 1");
    if (q.domain.x1 <= q.domain.x0 || q.domain.y1 <= q.domain.y0)
        throw spec_error("quadrature spec: empty domain");
}

inline void validate_search(const SearchSpec& s, int m, int n) {
    if (s.grid_points_per_axis < 4 * std::max(m, n))
        throw spec_error("search spec: need at least 4*max(m,n) grid points per axis");
    if (s.refinement_rounds < 0 || s.refinement_factor < 1)
        throw spec_error("search spec: bad refinement settings");
}

struct SupResult {
    double value = 0.0;
    double x = 0.0, y = 0.0; // achieved argmax
};

struct NormReport {
    std::string kernel;
    int m = 0, n = 0;
    double value = 0.0;
    int cells_per_oscillation = 0;
    int gauss_order = 0;
    double self_convergence = 0.0; // relative change when cells are doubled
};

// integral of |f| over quad.domain; cells resolve cpo cells per oscillation
// of frequencies (m, n) along (x, y)
template <class F>
double l1_norm_2d(F&& f, int m, int n, const QuadratureSpec& quad) {
    validate_quad(quad);
    const GaussRule g = gauss_legendre(quad.gauss_order);
    std::vector<double> xs, wx, ys, wy;
    composite_axis(quad.domain.x0, quad.domain.x1, quad.cells_per_oscillation * std::max(m, 1),
                   g, xs, wx);
    composite_axis(quad.domain.y0, quad.domain.y1, quad.cells_per_oscillation * std::max(n, 1),
                   g, ys, wy);
    Accumulator total;
    for (std::size_t j = 0; j < ys.size(); ++j) {
        Accumulator row;
        for (std::size_t i = 0; i < xs.size(); ++i)
            row.add(wx[i] * std::abs(f(xs[i], ys[j])));
        total.add(wy[j] * row.value());
    }
    return total.value();
}

template <class F>
double l1_norm_1d(F&& f, int freq, const QuadratureSpec& quad, double a, double b) {
    validate_quad(quad);
    const GaussRule g = gauss_legendre(quad.gauss_order);
    std::vector<double> xs, wx;
    composite_axis(a, b, quad.cells_per_oscillation * std::max(freq, 1), g, xs, wx);
    Accumulator total;
    for (std::size_t i = 0; i < xs.size(); ++i)
        total.add(wx[i] * std::abs(f(xs[i])));
    return total.value();
}

template <class F>
NormReport l1_report(const std::string& kernel, F&& f, int m, int n, QuadratureSpec quad) {
    NormReport r;
    r.kernel = kernel;
    r.m = m;
    r.n = n;
    const double coarse = l1_norm_2d(f, m, n, quad);
    quad.cells_per_oscillation *= 2;
    const double fine = l1_norm_2d(f, m, n, quad);
    r.value = fine;
    r.cells_per_oscillation = quad.cells_per_oscillation;
    r.gauss_order = quad.gauss_order;
    r.self_convergence = std::abs(fine - coarse) / std::max(std::abs(fine), 1e-300);
    return r;
}

namespace detail {

// separable tables for the rhombus kernel: value(x, y) = sum_k A_k(x) B_k(y)
struct RhombusTables {
    int m = 0, n = 0;
    std::vector<int> Nk; // row half-widths

    explicit RhombusTables(int m_, int n_) : m(m_), n(n_), Nk(m_ + 1) {
        for (int k = 0; k <= m; ++k)
            Nk[k] = static_cast<int>((static_cast<long long>(n) * (m - k)) / m);
    }
    // column of K(N_k, y) over k
    void kcolumn(double y, double* out) const {
        for (int k = 0; k <= m; ++k)
            out[k] = kdir(Nk[k], y);
    }
    // column of w_k cos(k x) over k, w_0 = 1, w_k = 2
    void ccolumn(double x, double* out) const {
        out[0] = 1.0;
        for (int k = 1; k <= m; ++k)
            out[k] = 2.0 * std::cos(k * x);
    }
};

} // namespace detail

// (1/(4 pi^2)) integral over the full torus of |rhombus kernel|, computed as
// (1/pi^2) * integral over [0,pi)^2 using evenness in each variable
inline double lebesgue_continuous(int m, int n, const QuadratureSpec& quad = {}) {
    validate_quad(quad);
    if (m < 1 || n < 1) throw degree_error("lebesgue_continuous: m, n must be >= 1");
    const GaussRule g = gauss_legendre(quad.gauss_order);
    std::vector<double> xs, wx, ys, wy;
    composite_axis(0.0, pi, quad.cells_per_oscillation * m, g, xs, wx);
    composite_axis(0.0, pi, quad.cells_per_oscillation * n, g, ys, wy);

    const detail::RhombusTables tab(m, n);
    const std::size_t K = static_cast<std::size_t>(m) + 1;
    std::vector<double> A(xs.size() * K); // A[i*K + k] = w_k cos(k x_i)
    for (std::size_t i = 0; i < xs.size(); ++i)
        tab.ccolumn(xs[i], &A[i * K]);
    std::vector<double> B(K);
    Accumulator total;
    for (std::size_t j = 0; j < ys.size(); ++j) {
        tab.kcolumn(ys[j], B.data());
        Accumulator row;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            const double* a = &A[i * K];
            double v = 0.0;
            for (std::size_t k = 0; k < K; ++k)
                v += a[k] * B[k];
            row.add(wx[i] * std::abs(v));
        }
        total.add(wy[j] * row.value());
    }
    return total.value() / (pi * pi);
}

// (1/(4mn)) sum over mu in [-m, m-1], nu in [-n, n-1] of
// |rhombus kernel at (x - pi mu/m, y - pi nu/n)|
inline double lebesgue_function_discrete(int m, int n, double x, double y) {
    if (m < 1 || n < 1) throw degree_error("lebesgue_function_discrete: m, n must be >= 1");
    const detail::RhombusTables tab(m, n);
    const std::size_t K = static_cast<std::size_t>(m) + 1;
    std::vector<double> Kt(2 * static_cast<std::size_t>(n) * K);
    std::vector<double> Ct(2 * static_cast<std::size_t>(m) * K);
    for (int nu = -n; nu < n; ++nu)
        tab.kcolumn(y - pi * nu / n, &Kt[(nu + n) * K]);
    for (int mu = -m; mu < m; ++mu)
        tab.ccolumn(x - pi * mu / m, &Ct[(mu + m) * K]);
    Accumulator acc;
    for (int nu = 0; nu < 2 * n; ++nu) {
        const double* kt = &Kt[static_cast<std::size_t>(nu) * K];
        for (int mu = 0; mu < 2 * m; ++mu) {
            const double* ct = &Ct[static_cast<std::size_t>(mu) * K];
            double v = 0.0;
            for (std::size_t k = 0; k < K; ++k)
                v += ct[k] * kt[k];
            acc.add(std::abs(v));
        }
    }
    return acc.value() / (4.0 * m * n);
}

namespace detail {

template <class F2>
SupResult grid_maximize(F2&& f, double x0, double x1, double y0, double y1, int gx, int gy,
                        int rounds, int factor) {
    SupResult best{-1.0, x0, y0};
    auto scan = [&](const std::vector<double>& xs, const std::vector<double>& ys) {
        for (double yy : ys)
            for (double xx : xs) {
                const double v = f(xx, yy);
                if (v > best.value) best = {v, xx, yy};
            }
    };
    auto linspace = [](double a, double b, int count) {
        std::vector<double> v(count);
        for (int i = 0; i < count; ++i)
            v[i] = count == 1 ? a : a + (b - a) * i / (count - 1);
        return v;
    };
    scan(linspace(x0, x1, gx), linspace(y0, y1, gy));
    double hx = (x1 - x0) / (gx - 1), hy = (y1 - y0) / (gy - 1);
    for (int r = 0; r < rounds; ++r) {
        const int pts = 2 * factor + 1;
        const std::vector<double> xs =
            linspace(std::max(x0, best.x - hx), std::min(x1, best.x + hx), pts);
        const std::vector<double> ys =
            linspace(std::max(y0, best.y - hy), std::min(y1, best.y + hy), pts);
        scan(xs, ys);
        hx = (xs[1] - xs[0]);
        hy = (ys[1] - ys[0]);
    }
    return best;
}

} // namespace detail

// sup of the discrete Lebesgue function over the fundamental periodicity cell
// [0, pi/m] x [0, pi/n]; periodicity in x is re-verified at the argmax
inline SupResult lebesgue_constant_discrete(int m, int n, SearchSpec search = {}) {
    if (m < 1 || n < 1) throw degree_error("lebesgue_constant_discrete: m, n must be >= 1");
    if (search.grid_points_per_axis == 0) search = default_search_spec(m, n);
    validate_search(search, m, n);
    const int gp = search.grid_points_per_axis + 1;
    SupResult best = detail::grid_maximize(
        [&](double xx, double yy) { return lebesgue_function_discrete(m, n, xx, yy); }, 0.0,
        pi / m, 0.0, pi / n, gp, gp, search.refinement_rounds, search.refinement_factor);
    const double shifted = lebesgue_function_discrete(m, n, best.x + pi / m, best.y);
    if (std::abs(shifted - best.value) > 1e-9 * std::max(1.0, best.value))
        throw error("lebesgue_constant_discrete: periodicity check failed at the argmax");
    return best;
}

// sup over the torus of the shifted-grid average of |F|; the average is not
// periodic with the cell pi/m (the shifts cover only half a period), so the
// search runs over the full [0, 2pi)^2
inline SupResult frak_f(int m, int n, SearchSpec search = {},
                        FVariant variant = default_f_variant) {
    if (m < 1 || n < 1) throw degree_error("frak_f: m, n must be >= 1");
    if (search.grid_points_per_axis == 0) search = default_search_spec(m, n);
    validate_search(search, m, n);
    auto avg = [&](double xx, double yy) {
        Accumulator acc;
        for (int mu = 0; mu < m; ++mu)
            for (int nu = 0; nu < n; ++nu)
                acc.add(std::abs(f_kernel(m, n, xx + pi * mu / m, yy + pi * nu / n, variant).value));
        return acc.value() / (static_cast<double>(m) * n);
    };
    const int gp = search.grid_points_per_axis;
    const double span = 2.0 * pi * (gp - 1.0) / gp; // grid over [0, 2pi), endpoint excluded
    return detail::grid_maximize(avg, 0.0, span, 0.0, span, gp, gp, search.refinement_rounds,
                                 search.refinement_factor);
}

struct TrigPoly {
    int n = 0;              // degree
    double a0 = 0.0;
    std::vector<double> a;  // cos coefficients, a[j-1] for frequency j
    std::vector<double> b;  // sin coefficients
};

inline double trig_eval(const TrigPoly& t, double x) {
    double v = t.a0;
    for (int j = 1; j <= t.n; ++j)
        v += t.a[j - 1] * std::cos(j * x) + t.b[j - 1] * std::sin(j * x);
    return v;
}

// ((1/n) sum_{nu=0}^{n-1} |T(pi nu / n)|) / integral_T |T|
inline double mz_ratio(const TrigPoly& t, const QuadratureSpec& quad = {}) {
    if (t.n < 1 || static_cast<int>(t.a.size()) != t.n || static_cast<int>(t.b.size()) != t.n)
        throw spec_error("mz_ratio: coefficient arrays must have length n >= 1");
    Accumulator num;
    for (int nu = 0; nu < t.n; ++nu)
        num.add(std::abs(trig_eval(t, pi * nu / t.n)));
    QuadratureSpec q = quad;
    q.domain = {-pi, pi, 0.0, 1.0};
    const double den = l1_norm_1d([&](double x) { return trig_eval(t, x); }, 2 * t.n, q, -pi, pi);
    if (den < 1e-12) throw spec_error("mz_ratio: zero polynomial has no defined ratio");
    return num.value() / t.n / den;
}

} // namespace lcleb
