// Growth-law checks: computed constants vs. their leading terms, with
// residuals measured against the proven remainder scales.
#pragma once

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "lcleb/errors.hpp"
#include "lcleb/interp.hpp"
#include "lcleb/kernels.hpp"
#include "lcleb/lcnodes.hpp"
#include "lcleb/norms.hpp"

namespace lcleb {

enum class SweepKind { continuous, discrete, lc, fnorm, scriptf, delta1, delta2 };

inline const char* sweep_kind_name(SweepKind k) {
    switch (k) {
        case SweepKind::continuous: return "continuous";
        case SweepKind::discrete: return "discrete";
        case SweepKind::lc: return "lc";
        case SweepKind::fnorm: return "fnorm";
        case SweepKind::scriptf: return "scriptf";
        case SweepKind::delta1: return "delta1";
        case SweepKind::delta2: return "delta2";
    }
    return "?";
}

inline SweepKind sweep_kind_from(const std::string& s) {
    for (SweepKind k : {SweepKind::continuous, SweepKind::discrete, SweepKind::lc,
                        SweepKind::fnorm, SweepKind::scriptf, SweepKind::delta1,
                        SweepKind::delta2})
        if (s == sweep_kind_name(k)) return k;
    throw spec_error("unknown sweep kind: " + s);
}

// leading term of the growth law; the zero kinds are pure boundedness checks
inline double main_term(SweepKind kind, int m, int n) {
    switch (kind) {
        case SweepKind::continuous:
        case SweepKind::discrete:
        case SweepKind::lc: {
            if (m < 3 || n < m)
                throw regime_error("main term needs 3 <= m <= n");
            const double G = 2.0 * std::log(m) * std::log(n) - std::log(m) * std::log(m);
            if (kind == SweepKind::continuous) return 16.0 / (pi * pi * pi * pi) * G;
            if (kind == SweepKind::lc) return 4.0 / (pi * pi) * G;
            return 2.0 / (pi * pi) * G;
        }
        case SweepKind::delta1:
            if (m < 3) throw regime_error("main term needs m >= 3");
            return 8.0 / (pi * pi) * std::log(m) * std::log(m);
        case SweepKind::delta2:
            if (m < 3) throw regime_error("main term needs m >= 3");
            return 16.0 / pi * std::log(m);
        case SweepKind::fnorm:
        case SweepKind::scriptf:
            return 0.0;
    }
    return 0.0;
}

// scale of the remainder for the three Lebesgue-constant laws:
// log n when m | n, otherwise log n + p log(m/p) with p = n mod m
inline double remainder_scale(int m, int n) {
    if (m < 3 || n < m) throw regime_error("remainder scale needs 3 <= m <= n");
    const int p = n % m;
    if (p == 0) return std::log(n);
    return std::log(n) + p * std::log(static_cast<double>(m) / p);
}

namespace detail {

inline double sweep_scale(SweepKind kind, int m, int n) {
    switch (kind) {
        case SweepKind::continuous:
        case SweepKind::discrete:
        case SweepKind::lc:
            return remainder_scale(m, n);
        case SweepKind::delta1:
            return std::log(m);
        case SweepKind::delta2:
            return 1.0;
        case SweepKind::scriptf: // n plays the role of p here
            return n * std::log(static_cast<double>(m) / n);
        case SweepKind::fnorm: {
            const int p = n % m;
            if (p == 0) return 1.0; // the norm is exactly zero in this case
            return std::min(std::log(m) * std::log(m),
                            p * std::log(static_cast<double>(m) / p));
        }
    }
    return 1.0;
}

inline void check_regime(SweepKind kind, int m, int n) {
    switch (kind) {
        case SweepKind::continuous:
        case SweepKind::discrete:
        case SweepKind::lc:
            if (m < 3 || n < m) throw regime_error("sweep: kind needs 3 <= m <= n");
            break;
        case SweepKind::delta1:
        case SweepKind::delta2:
            if (m < 3) throw regime_error("sweep: delta kinds need m >= 3");
            if (n != m) throw regime_error("sweep: delta kinds are square, pass n = m");
            break;
        case SweepKind::scriptf:
            if (m < 2 || n < 1 || n >= m)
                throw regime_error("sweep: scriptf needs 1 <= p < m (pass p as n)");
            break;
        case SweepKind::fnorm:
            if (m < 1 || n < 1) throw regime_error("sweep: fnorm needs m, n >= 1");
            break;
    }
}

} // namespace detail

struct SweepRecord {
    std::string kind;
    int m = 0, n = 0;
    int lambda = 0, p = 0; // n = lambda * m + p, 0 <= p < m
    double computed = 0.0;
    double main_term = 0.0;
    double residual = 0.0;
    double remainder_scale = 0.0;
    double ratio = 0.0; // |residual| / remainder_scale
};

inline SweepRecord sweep_entry(SweepKind kind, int m, int n, const QuadratureSpec& quad = {},
                               SearchSpec search = {}) {
    detail::check_regime(kind, m, n);
    double value = 0.0;
    switch (kind) {
        case SweepKind::continuous:
            value = lebesgue_continuous(m, n, quad);
            break;
        case SweepKind::discrete:
            value = lebesgue_constant_discrete(m, n, search).value;
            break;
        case SweepKind::lc:
            value = lebesgue_constant_lc(build_nodes(degree_pair(m, n)), search).value;
            break;
        case SweepKind::fnorm:
            // full-torus integral, folded to [0,pi)^2 by evenness in each variable
            value = 4.0 * l1_norm_2d(
                              [&](double x, double y) { return f_kernel(m, n, x, y).value; },
                              m, n, quad);
            break;
        case SweepKind::scriptf:
            value = 2.0 * l1_norm_1d([&](double x) { return std::abs(script_f(m, n, x)); }, m,
                                     quad, 0.0, pi);
            break;
        case SweepKind::delta1:
            value = l1_norm_2d(
                [&](double x, double y) { return delta_kernels(m, x, y).d1.value; }, m, m, quad);
            break;
        case SweepKind::delta2:
            value = l1_norm_2d(
                [&](double x, double y) { return delta_kernels(m, x, y).d2.value; }, m, m, quad);
            break;
    }
    SweepRecord r;
    r.kind = sweep_kind_name(kind);
    r.m = m;
    r.n = n;
    r.lambda = n / m;
    r.p = n % m;
    r.computed = value;
    r.main_term = lcleb::main_term(kind, m, n);
    r.residual = r.computed - r.main_term;
    r.remainder_scale = detail::sweep_scale(kind, m, n);
    r.ratio = std::abs(r.residual) / r.remainder_scale;
    return r;
}

constexpr int default_size_cap = 128;

// guard pass run before any computation starts, so a bad entry late in the
// list cannot waste a long partial run
inline void validate_sweep(SweepKind kind, const std::vector<std::pair<int, int>>& sizes,
                           int max_size = default_size_cap) {
    for (const auto& [m, n] : sizes) {
        if (std::max(m, n) > max_size)
            throw cap_error("sweep: size " + std::to_string(std::max(m, n)) +
                            " exceeds the cap " + std::to_string(max_size) +
                            "; raise the cap to confirm a long run");
        detail::check_regime(kind, m, n);
        if (kind == SweepKind::lc) require_coprime(degree_pair(m, n), "sweep");
    }
}

inline std::vector<SweepRecord> sweep(SweepKind kind,
                                      const std::vector<std::pair<int, int>>& sizes,
                                      const QuadratureSpec& quad = {}, SearchSpec search = {},
                                      int max_size = default_size_cap) {
    validate_sweep(kind, sizes, max_size);
    std::vector<SweepRecord> out;
    out.reserve(sizes.size());
    for (const auto& [m, n] : sizes)
        out.push_back(sweep_entry(kind, m, n, quad, search));
    return out;
}

// boundedness checks exposed directly; scriptf passes p in place of n
inline SweepRecord fnorm_check(int m, int n, const QuadratureSpec& quad = {}) {
    return sweep_entry(SweepKind::fnorm, m, n, quad);
}

inline SweepRecord script_f_check(int m, int p, const QuadratureSpec& quad = {}) {
    return sweep_entry(SweepKind::scriptf, m, p, quad);
}

} // namespace lcleb
