// CSV serialization. All values use %.17g (round-trip exact for doubles),
// '.' decimal separator, LF line endings; open output streams in binary
// mode so no platform translation happens.
#pragma once

#include <cstdio>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include "lcleb/asympt.hpp"
#include "lcleb/errors.hpp"
#include "lcleb/interp.hpp"
#include "lcleb/lcnodes.hpp"
#include "lcleb/norms.hpp"

namespace lcleb {

inline std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline void write_nodes_csv(std::ostream& os, const NodeSet& nodes) {
    os << "k,l,u,v,weight,class\n";
    for (const Node& nd : nodes.entries)
        os << nd.k << ',' << nd.l << ',' << format_g17(nd.u) << ',' << format_g17(nd.v) << ','
           << format_g17(nd.weight) << ',' << node_class_name(nd.cls) << '\n';
}

inline void write_interpolant_csv(std::ostream& os, const Interpolant& p) {
    os << "i,j,c_ij\n";
    for (const auto& [ij, c] : p.coeffs)
        os << ij.first << ',' << ij.second << ',' << format_g17(c) << '\n';
}

inline void write_sweep_csv(std::ostream& os, const std::vector<SweepRecord>& records) {
    os << "kind,m,n,lambda,p,computed,main_term,residual,remainder_scale,ratio\n";
    for (const SweepRecord& r : records)
        os << r.kind << ',' << r.m << ',' << r.n << ',' << r.lambda << ',' << r.p << ','
           << format_g17(r.computed) << ',' << format_g17(r.main_term) << ','
           << format_g17(r.residual) << ',' << format_g17(r.remainder_scale) << ','
           << format_g17(r.ratio) << '\n';
}

inline void write_norm_report_csv(std::ostream& os, const std::vector<NormReport>& reports) {
    os << "kernel,m,n,value,cells_per_oscillation,gauss_order,self_convergence\n";
    for (const NormReport& r : reports)
        os << r.kernel << ',' << r.m << ',' << r.n << ',' << format_g17(r.value) << ','
           << r.cells_per_oscillation << ',' << r.gauss_order << ','
           << format_g17(r.self_convergence) << '\n';
}

struct ResidualSample {
    double x = 0.0, y = 0.0;
    double residual = 0.0;
    double tail_bound = 0.0;
};

inline void write_residuals_csv(std::ostream& os, const std::vector<ResidualSample>& rows) {
    os << "x,y,residual,tail_bound\n";
    for (const ResidualSample& r : rows)
        os << format_g17(r.x) << ',' << format_g17(r.y) << ',' << format_g17(r.residual) << ','
           << format_g17(r.tail_bound) << '\n';
}

inline std::ofstream open_csv(const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw spec_error("cannot open output file: " + path);
    return f;
}

} // namespace lcleb
