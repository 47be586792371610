// Command-line front end: node generation, kernel identity checks, Lebesgue
// constants, and growth sweeps, with CSV and SVG output.
//
// Exit codes: 0 success, 1 a numeric check failed its contract, 2 usage or
// configuration error.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "lcleb/lcleb.hpp"

namespace {

struct RunConfig {
    int m = 0, n = 0;               // scalar commands
    std::vector<int> m_list, n_list; // sweep
    std::string kind;
    int grid = 0;      // search grid points per axis; kernel-verify: sample count
    int cells = 0;     // quadrature cells per oscillation (0 = default)
    int trunc_v = 2000;
    std::string variant = "minus";
    std::string out, svg;
    std::uint64_t seed = 0;
    int max_size = lcleb::default_size_cap;
};

lcleb::QuadratureSpec quad_from(const RunConfig& cfg) {
    lcleb::QuadratureSpec q;
    if (cfg.cells > 0) q.cells_per_oscillation = cfg.cells;
    return q;
}

lcleb::SearchSpec search_from(const RunConfig& cfg, int m, int n) {
    lcleb::SearchSpec s = lcleb::default_search_spec(m, n);
    if (cfg.grid > 0) s.grid_points_per_axis = cfg.grid;
    return s;
}

lcleb::FVariant variant_from(const RunConfig& cfg) {
    if (cfg.variant == "minus") return lcleb::FVariant::minus;
    if (cfg.variant == "plus") return lcleb::FVariant::plus;
    throw lcleb::spec_error("unknown variant: " + cfg.variant);
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw lcleb::spec_error("cannot open output file: " + path);
    f << text;
}

int cmd_nodes(const RunConfig& cfg) {
    const lcleb::DegreePair d = lcleb::degree_pair(cfg.m, cfg.n);
    const lcleb::NodeSet ns = lcleb::build_nodes(d);
    int classes[3] = {0, 0, 0};
    double wsum = 0.0;
    for (const lcleb::Node& nd : ns.entries) {
        ++classes[static_cast<int>(nd.cls)];
        wsum += nd.weight;
    }
    const bool match = lcleb::curve_node_match(d);
    std::printf("(%d,%d): %zu nodes (%d vertex, %d edge, %d interior); weight sum %.17g; "
                "curve match: %s\n",
                d.m, d.n, ns.entries.size(), classes[0], classes[1], classes[2], wsum,
                match ? "yes" : "NO");
    if (!cfg.out.empty()) {
        auto f = lcleb::open_csv(cfg.out);
        lcleb::write_nodes_csv(f, ns);
    }
    if (!cfg.svg.empty()) write_file(cfg.svg, lcleb::svg_nodes_figure(ns));
    return match ? 0 : 1;
}

int cmd_kernel_verify(const RunConfig& cfg) {
    const int m = cfg.m, n = cfg.n;
    if (m < 1 || n < 1) throw lcleb::degree_error("kernel-verify: m, n must be >= 1");
    const int points = cfg.grid > 0 ? cfg.grid : 200;
    const lcleb::FVariant variant = variant_from(cfg);
    lcleb::TruncationSpec trunc{cfg.trunc_v, 0.0};
    lcleb::Rng rng(cfg.seed);
    std::vector<lcleb::ResidualSample> rows;
    rows.reserve(points);
    double worst_excess = -1e300, max_res = 0.0, max_bound = 0.0;
    for (int i = 0; i < points; ++i) {
        const double x = rng.uniform(-lcleb::pi, lcleb::pi);
        double y = rng.uniform(-lcleb::pi, lcleb::pi);
        if (std::abs(y) < 1e-3) y += y < 0 ? -2e-3 : 2e-3; // keep the bound meaningful
        const double res = lcleb::decomposition_residual(m, n, x, y, trunc, variant);
        rows.push_back({x, y, res, trunc.tail_bound});
        max_res = std::max(max_res, res);
        max_bound = std::max(max_bound, trunc.tail_bound);
        worst_excess = std::max(worst_excess, res - (trunc.tail_bound + 1e-8));
    }
    const bool pass = worst_excess <= 0.0;
    std::printf("(%d,%d) variant %s, V=%d, %d points: max residual %.3e, max tail bound %.3e "
                "-> %s\n",
                m, n, cfg.variant.c_str(), cfg.trunc_v, points, max_res, max_bound,
                pass ? "PASS" : "FAIL");
    if (!cfg.out.empty()) {
        auto f = lcleb::open_csv(cfg.out);
        lcleb::write_residuals_csv(f, rows);
    }
    return pass ? 0 : 1;
}

int cmd_lebesgue(const RunConfig& cfg) {
    const int m = cfg.m, n = cfg.n;
    const lcleb::SweepKind kind = lcleb::sweep_kind_from(cfg.kind);
    if (kind != lcleb::SweepKind::continuous && kind != lcleb::SweepKind::discrete &&
        kind != lcleb::SweepKind::lc)
        throw lcleb::spec_error("lebesgue: kind must be continuous, discrete or lc");
    const lcleb::SweepRecord r =
        lcleb::sweep_entry(kind, m, n, quad_from(cfg), search_from(cfg, m, n));
    std::printf("%s (%d,%d): computed %.12g, main term %.12g, residual %+.6g, "
                "scale %.6g, ratio %.6g\n",
                r.kind.c_str(), r.m, r.n, r.computed, r.main_term, r.residual,
                r.remainder_scale, r.ratio);
    if (!cfg.out.empty()) {
        auto f = lcleb::open_csv(cfg.out);
        lcleb::write_sweep_csv(f, {r});
    }
    return 0;
}

std::vector<std::pair<int, int>> sweep_sizes(const RunConfig& cfg, lcleb::SweepKind kind) {
    std::vector<std::pair<int, int>> sizes;
    for (std::size_t i = 0; i < cfg.m_list.size(); ++i) {
        const int m = cfg.m_list[i];
        int n;
        if (i < cfg.n_list.size()) {
            n = cfg.n_list[i];
        } else if (kind == lcleb::SweepKind::continuous || kind == lcleb::SweepKind::lc ||
                   kind == lcleb::SweepKind::discrete) {
            n = m + 1;
        } else if (kind == lcleb::SweepKind::delta1 || kind == lcleb::SweepKind::delta2) {
            n = m;
        } else {
            throw lcleb::spec_error("sweep: this kind needs explicit --n values");
        }
        sizes.emplace_back(m, n);
    }
    return sizes;
}

int cmd_sweep(const RunConfig& cfg) {
    const lcleb::SweepKind kind = lcleb::sweep_kind_from(cfg.kind);
    const auto sizes = sweep_sizes(cfg, kind);
    if (sizes.empty()) throw lcleb::spec_error("sweep: no sizes given");
    lcleb::validate_sweep(kind, sizes, cfg.max_size);
    std::vector<lcleb::SweepRecord> records;
    for (const auto& [m, n] : sizes) {
        records.push_back(
            lcleb::sweep_entry(kind, m, n, quad_from(cfg), search_from(cfg, m, n)));
        const lcleb::SweepRecord& r = records.back();
        std::printf("%s (%d,%d): computed %.12g, main %.12g, residual %+.6g, ratio %.6g\n",
                    r.kind.c_str(), r.m, r.n, r.computed, r.main_term, r.residual, r.ratio);
    }
    if (!cfg.out.empty()) {
        auto f = lcleb::open_csv(cfg.out);
        lcleb::write_sweep_csv(f, records);
    }
    if (!cfg.svg.empty()) write_file(cfg.svg, lcleb::svg_sweep_figure(records));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lebesgue constants and kernel checks for rhombus partial sums and "
                 "Lissajous-Chebyshev interpolation"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_common = [&](CLI::App* sub, bool list_sizes) {
        if (list_sizes) {
            sub->add_option("--m", cfg.m_list, "degree parameter(s) m, comma separated")
                ->required()
                ->delimiter(',');
            sub->add_option("--n", cfg.n_list, "degree parameter(s) n, comma separated")
                ->delimiter(',');
        } else {
            sub->add_option("--m", cfg.m, "degree parameter m")->required();
            sub->add_option("--n", cfg.n, "degree parameter n")->required();
        }
        sub->add_option("--out", cfg.out, "CSV output path");
    };

    CLI::App* nodes = app.add_subcommand("nodes", "generate a node set");
    add_common(nodes, false);
    nodes->add_option("--svg", cfg.svg, "SVG figure path");

    CLI::App* kv = app.add_subcommand("kernel-verify",
                                      "check the kernel decomposition at random points");
    add_common(kv, false);
    kv->add_option("--grid", cfg.grid, "number of sample points (default 200)");
    kv->add_option("--trunc-V", cfg.trunc_v, "Fourier tail cutoff (default 2000)");
    kv->add_option("--variant", cfg.variant, "correction variant: minus (default) or plus")
        ->check(CLI::IsMember({"minus", "plus"}));
    kv->add_option("--seed", cfg.seed, "random seed (default 0)");

    CLI::App* leb = app.add_subcommand("lebesgue", "compute one Lebesgue constant");
    add_common(leb, false);
    leb->add_option("--kind", cfg.kind, "continuous, discrete or lc")->required();
    leb->add_option("--grid", cfg.grid, "search grid points per axis");
    leb->add_option("--cells", cfg.cells, "quadrature cells per oscillation");

    CLI::App* sw = app.add_subcommand("sweep", "run a growth sweep over sizes");
    add_common(sw, true);
    sw->add_option("--kind", cfg.kind,
                   "continuous, discrete, lc, fnorm, scriptf, delta1 or delta2")
        ->required();
    sw->add_option("--grid", cfg.grid, "search grid points per axis");
    sw->add_option("--cells", cfg.cells, "quadrature cells per oscillation");
    sw->add_option("--max-size", cfg.max_size, "size cap guard (default 128)");
    sw->add_option("--svg", cfg.svg, "SVG figure path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(nodes)) return cmd_nodes(cfg);
        if (app.got_subcommand(kv)) return cmd_kernel_verify(cfg);
        if (app.got_subcommand(leb)) return cmd_lebesgue(cfg);
        if (app.got_subcommand(sw)) return cmd_sweep(cfg);
    } catch (const lcleb::singular_error& e) {
        std::cerr << "numeric check failed: " << e.what() << "\n";
        return 1;
    } catch (const lcleb::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
