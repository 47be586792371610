// Chebyshev-Gauss-Lobatto points and the normalized Chebyshev basis
// (C_0 = 1, C_n(u) = sqrt(2) cos(n arccos u) for n >= 1).
#pragma once

#include <cmath>
#include <vector>

#include "lcleb/errors.hpp"
#include "lcleb/util.hpp"

namespace lcleb {

inline constexpr double sqrt2 = 1.41421356237309504880;

struct AngleGrid {
    int m = 0;
    std::vector<double> points; // points[k] = cos(k*pi/m), strictly decreasing
};

inline AngleGrid cgl_points(int m) {
    if (m < 1) throw degree_error("cgl_points: m must be >= 1");
    AngleGrid g;
    g.m = m;
    g.points.resize(m + 1);
    for (int k = 0; k <= m; ++k)
        g.points[k] = std::cos(k * pi / m);
    return g;
}

// C_n evaluated at u = cos(theta); exact for node angles, no arccos needed
inline double cheb_eval_angle(int n, double theta) {
    return n == 0 ? 1.0 : sqrt2 * std::cos(n * theta);
}

inline double cheb_eval(int n, double u) {
    if (n < 0) throw degree_error("cheb_eval: n must be >= 0");
    if (std::abs(u) > 1.0) throw domain_error("cheb_eval: |u| > 1");
    return cheb_eval_angle(n, std::acos(u));
}

} // namespace lcleb
