// Small numeric helpers: constants, fractional part, compensated summation,
// a reproducible uniform RNG, and Gauss-Legendre rules.
#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "lcleb/errors.hpp"

namespace lcleb {

inline constexpr double pi = 3.14159265358979323846;

// fractional part with the floor convention: frac(-1.5) = 0.5, frac(x) in [0,1)
inline double frac(double x) {
    return x - std::floor(x);
}

// exact {-p*k/m} as a rational: ((-p*k) mod m) / m, result in [0,1)
inline double frac_neg_ratio(long long p, long long k, long long m) {
    long long r = (-(p % m) * (k % m)) % m;
    if (r < 0) r += m;
    return static_cast<double>(r) / static_cast<double>(m);
}

inline long long gcd_ll(long long a, long long b) {
    while (b != 0) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a < 0 ? -a : a;
}

// Kahan-Babuska compensated accumulator; deterministic in call order.
class Accumulator {
  public:
    void add(double x) {
        double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

  private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

// Uniform doubles built from raw mt19937_64 output so streams are identical
// across standard library implementations.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    double uniform01() {
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }
    double uniform(double a, double b) { return a + (b - a) * uniform01(); }

  private:
    std::mt19937_64 eng_;
};

struct GaussRule {
    std::vector<double> nodes;   // on (-1, 1)
    std::vector<double> weights; // sum to 2
};

// Gauss-Legendre nodes/weights by Newton iteration on the Legendre recurrence.
inline GaussRule gauss_legendre(int order) {
    if (order < 1) throw spec_error("gauss order must be >= 1");
    GaussRule rule;
    rule.nodes.resize(order);
    rule.weights.resize(order);
    for (int i = 0; i < (order + 1) / 2; ++i) {
        double x = std::cos(pi * (i + 0.75) / (order + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= order; ++j) {
                double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = order * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.nodes[i] = -x;
        rule.nodes[order - 1 - i] = x;
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.weights[i] = w;
        rule.weights[order - 1 - i] = w;
    }
    if (order % 2 == 1) rule.nodes[order / 2] = 0.0;
    return rule;
}

// Composite Gauss-Legendre points over [a, b) split into `cells` equal cells.
inline void composite_axis(double a, double b, int cells, const GaussRule& g,
                           std::vector<double>& pts, std::vector<double>& wts) {
    pts.clear();
    wts.clear();
    pts.reserve(static_cast<std::size_t>(cells) * g.nodes.size());
    wts.reserve(static_cast<std::size_t>(cells) * g.nodes.size());
    const double h = (b - a) / cells;
    for (int c = 0; c < cells; ++c) {
        const double mid = a + (c + 0.5) * h;
        for (std::size_t q = 0; q < g.nodes.size(); ++q) {
            pts.push_back(mid + 0.5 * h * g.nodes[q]);
            wts.push_back(0.5 * h * g.weights[q]);
        }
    }
}

} // namespace lcleb
