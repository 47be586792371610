// Minimal static SVG 1.1 emitter plus the two figures the CLI can produce:
// the sampled curve with node markers, and the sweep residual plot.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "lcleb/asympt.hpp"
#include "lcleb/lcnodes.hpp"

namespace lcleb {

namespace detail {
inline std::string fmt6(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}
} // namespace detail

class SvgCanvas {
  public:
    SvgCanvas(double w, double h) : w_(w), h_(h) {}

    void polyline(const std::vector<std::pair<double, double>>& pts, const std::string& stroke,
                  double width) {
        body_ += "<polyline fill=\"none\" stroke=\"" + stroke + "\" stroke-width=\"" +
                 detail::fmt6(width) + "\" points=\"";
        for (const auto& [x, y] : pts)
            body_ += detail::fmt6(x) + "," + detail::fmt6(y) + " ";
        body_ += "\"/>\n";
    }
    void line(double x1, double y1, double x2, double y2, const std::string& stroke,
              double width) {
        body_ += "<line x1=\"" + detail::fmt6(x1) + "\" y1=\"" + detail::fmt6(y1) + "\" x2=\"" +
                 detail::fmt6(x2) + "\" y2=\"" + detail::fmt6(y2) + "\" stroke=\"" + stroke +
                 "\" stroke-width=\"" + detail::fmt6(width) + "\"/>\n";
    }
    void circle(double cx, double cy, double r, const std::string& fill) {
        body_ += "<circle cx=\"" + detail::fmt6(cx) + "\" cy=\"" + detail::fmt6(cy) + "\" r=\"" +
                 detail::fmt6(r) + "\" fill=\"" + fill + "\"/>\n";
    }
    void text(double x, double y, const std::string& s, int size = 12) {
        body_ += "<text x=\"" + detail::fmt6(x) + "\" y=\"" + detail::fmt6(y) +
                 "\" font-family=\"sans-serif\" font-size=\"" + std::to_string(size) + "\">" + s +
                 "</text>\n";
    }
    std::string str() const {
        return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
               "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
               detail::fmt6(w_) + "\" height=\"" + detail::fmt6(h_) + "\" viewBox=\"0 0 " +
               detail::fmt6(w_) + " " + detail::fmt6(h_) + "\">\n" + body_ + "</svg>\n";
    }

  private:
    double w_, h_;
    std::string body_;
};

// the generating curve sampled densely, with the node markers colored by class
inline std::string svg_nodes_figure(const NodeSet& nodes, int curve_samples = 2000) {
    const int m = nodes.degrees.m, n = nodes.degrees.n;
    const double W = 480, H = 480, pad = 40;
    auto px = [&](double u) { return pad + (u + 1.0) / 2.0 * (W - 2 * pad); };
    auto py = [&](double v) { return H - pad - (v + 1.0) / 2.0 * (H - 2 * pad); };
    SvgCanvas svg(W, H);
    svg.line(px(-1), py(-1), px(1), py(-1), "#888", 1);
    svg.line(px(-1), py(-1), px(-1), py(1), "#888", 1);
    svg.line(px(-1), py(1), px(1), py(1), "#888", 1);
    svg.line(px(1), py(-1), px(1), py(1), "#888", 1);
    std::vector<std::pair<double, double>> pts;
    pts.reserve(curve_samples + 1);
    for (int s = 0; s <= curve_samples; ++s) {
        const double t = 2.0 * pi * s / curve_samples;
        const auto [u, v] = lissajous_point(nodes.degrees, t);
        pts.emplace_back(px(u), py(v));
    }
    svg.polyline(pts, "#bbbbbb", 0.8);
    for (const Node& nd : nodes.entries) {
        const char* color = nd.cls == NodeClass::vertex  ? "#d62728"
                            : nd.cls == NodeClass::edge  ? "#1f77b4"
                                                         : "#2ca02c";
        svg.circle(px(nd.u), py(nd.v), nd.cls == NodeClass::vertex ? 4.0 : 3.0, color);
    }
    svg.text(pad, pad - 14,
             "nodes (" + std::to_string(m) + ", " + std::to_string(n) + "), " +
                 std::to_string(nodes.entries.size()) + " points");
    return svg.str();
}

// residual ratios against size, x axis on a log scale
inline std::string svg_sweep_figure(const std::vector<SweepRecord>& records) {
    const double W = 560, H = 360, pad = 50;
    SvgCanvas svg(W, H);
    if (records.empty()) {
        svg.text(pad, H / 2, "empty sweep");
        return svg.str();
    }
    double xmin = 1e300, xmax = -1e300, ymin = 0.0, ymax = -1e300;
    std::vector<std::pair<double, double>> data;
    for (const SweepRecord& r : records) {
        const double x = std::log(static_cast<double>(std::max(r.m, r.n)));
        data.emplace_back(x, r.ratio);
        xmin = std::min(xmin, x);
        xmax = std::max(xmax, x);
        ymax = std::max(ymax, r.ratio);
    }
    if (xmax <= xmin) { xmin -= 0.5; xmax += 0.5; }
    if (ymax <= ymin) ymax = ymin + 1.0;
    ymax *= 1.1;
    auto px = [&](double x) { return pad + (x - xmin) / (xmax - xmin) * (W - 2 * pad); };
    auto py = [&](double y) { return H - pad - (y - ymin) / (ymax - ymin) * (H - 2 * pad); };
    svg.line(pad, H - pad, W - pad, H - pad, "#000", 1);
    svg.line(pad, H - pad, pad, pad, "#000", 1);
    std::vector<std::pair<double, double>> path;
    for (const auto& [x, y] : data)
        path.emplace_back(px(x), py(y));
    svg.polyline(path, "#1f77b4", 1.5);
    for (std::size_t i = 0; i < data.size(); ++i) {
        svg.circle(path[i].first, path[i].second, 3.0, "#1f77b4");
        svg.text(path[i].first - 8, H - pad + 16,
                 std::to_string(std::max(records[i].m, records[i].n)), 10);
    }
    svg.text(W / 2 - 40, H - 10, "size (log scale)", 11);
    svg.text(8, pad - 8, "|residual| / scale, kind " + records.front().kind, 11);
    svg.text(pad - 42, py(ymax / 1.1) + 4, detail::fmt6(ymax / 1.1), 10);
    svg.text(pad - 42, py(0) + 4, "0", 10);
    return svg.str();
}

} // namespace lcleb
