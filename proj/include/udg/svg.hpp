#pragma once

// SVG rendering of a drawing; crossed edges are drawn in a second colour.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "udg/crossings.hpp"
#include "udg/model.hpp"

namespace udg {

namespace detail {

inline std::string svg_num(double v) {
    if (std::fabs(v) < 5e-7) v = 0;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

}  // namespace detail

inline std::string render_svg(const Drawing& dr, const std::optional<CrossingReport>& rep = std::nullopt) {
    const double unit = std::max(dr.unit_length_hint(), 1e-9);
    double xlo = 0, xhi = 0, ylo = 0, yhi = 0;
    std::vector<std::pair<double, double>> pts;
    for (const auto& p : dr.vertices) pts.emplace_back(p.x().to_double(), -p.y().to_double());
    if (!pts.empty()) {
        xlo = xhi = pts[0].first;
        ylo = yhi = pts[0].second;
        for (const auto& [x, y] : pts) {
            xlo = std::min(xlo, x), xhi = std::max(xhi, x);
            ylo = std::min(ylo, y), yhi = std::max(yhi, y);
        }
    }
    const double pad = unit / 2, r = unit / 20, stroke = unit / 40;
    using detail::svg_num;
    std::string s = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + svg_num(xlo - pad) + " " +
                    svg_num(ylo - pad) + " " + svg_num(xhi - xlo + 2 * pad) + " " + svg_num(yhi - ylo + 2 * pad) +
                    "\">\n";
    s += "<g stroke-width=\"" + svg_num(stroke) + "\" stroke-linecap=\"round\">\n";
    for (std::size_t e = 0; e < dr.e(); ++e) {
        const bool crossed = rep && e < rep->per_edge.size() && rep->per_edge[e] > 0;
        const auto& a = pts[dr.edges[e].u];
        const auto& b = pts[dr.edges[e].v];
        s += "<line x1=\"" + svg_num(a.first) + "\" y1=\"" + svg_num(a.second) + "\" x2=\"" + svg_num(b.first) +
             "\" y2=\"" + svg_num(b.second) + "\" stroke=\"" + (crossed ? "#d62728" : "#1f77b4") + "\"/>\n";
    }
    s += "</g>\n<g fill=\"#000000\">\n";
    for (const auto& [x, y] : pts)
        s += "<circle cx=\"" + svg_num(x) + "\" cy=\"" + svg_num(y) + "\" r=\"" + svg_num(r) + "\"/>\n";
    s += "</g>\n</svg>\n";
    return s;
}

}  // namespace udg
