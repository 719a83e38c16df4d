#pragma once

// SVG rendering: one circle glyph per point (Blue/Red fill, black in mono),
// one line per matched pair, the witness edge stroked distinctly, viewport
// fitted to the bounding box with a 5% margin. Doubly-collinear instances
// additionally show their two supporting lines. Floating point is used only
// here, at the output boundary.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "ncm/instance.hpp"
#include "ncm/rational.hpp"

namespace ncm {

namespace detail {

struct FPoint {
    double x, y;
};

inline std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

inline std::vector<FPoint> render_coords(const Instance& inst) {
    std::vector<FPoint> out;
    if (inst.kind == Kind::Circle) {
        for (const CirclePoint& p : inst.circle) {
            double a = 2.0 * M_PI * to_double(p.turns);
            out.push_back({std::cos(a), std::sin(a)});
        }
    } else {
        for (const Point2& p : inst.points) out.push_back({to_double(p.x), to_double(p.y)});
    }
    return out;
}

}  // namespace detail

inline std::string render_svg(const Instance& inst,
                              const std::optional<Matching>& matching = std::nullopt,
                              IndexPair witness = {-1, -1}) {
    std::vector<detail::FPoint> pts = detail::render_coords(inst);
    double min_x = 1e300, max_x = -1e300, min_y = 1e300, max_y = -1e300;
    for (const auto& p : pts) {
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, p.y);
        max_y = std::max(max_y, p.y);
    }
    double w = max_x - min_x, h = max_y - min_y;
    if (w <= 0) w = 1;
    if (h <= 0) h = 1;
    double margin = 0.05 * std::max(w, h);
    double vx = min_x - margin, vy = min_y - margin;
    double vw = w + 2 * margin, vh = h + 2 * margin;
    double glyph_r = 0.008 * std::max(vw, vh);
    double stroke = 0.004 * std::max(vw, vh);

    std::string svg;
    auto f = detail::fmt;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + f(vx) + " " + f(vy) +
           " " + f(vw) + " " + f(vh) + "\" width=\"640\" height=\"640\">\n";
    // flip the y axis so the figure is in the usual orientation
    svg += "<g transform=\"translate(0," + f(2 * vy + vh) + ") scale(1,-1)\">\n";

    if (inst.kind == Kind::DoublyCollinear && inst.dc) {
        auto line_through = [&](const Vec2& d) {
            double dx = to_double(d.x), dy = to_double(d.y);
            double norm = std::hypot(dx, dy);
            double reach = 2.0 * std::max(vw, vh) / norm;
            svg += "<line x1=\"" + f(-dx * reach) + "\" y1=\"" + f(-dy * reach) +
                   "\" x2=\"" + f(dx * reach) + "\" y2=\"" + f(dy * reach) +
                   "\" stroke=\"#cccccc\" stroke-width=\"" + f(stroke * 0.5) + "\"/>\n";
        };
        line_through(inst.dc->dir_r);
        line_through(inst.dc->dir_b);
    }

    if (matching) {
        for (auto [a, b] : matching->pairs) {
            bool is_witness = IndexPair{std::min(a, b), std::max(a, b)} ==
                              IndexPair{std::min(witness.first, witness.second),
                                        std::max(witness.first, witness.second)};
            svg += "<line x1=\"" + f(pts[a].x) + "\" y1=\"" + f(pts[a].y) + "\" x2=\"" +
                   f(pts[b].x) + "\" y2=\"" + f(pts[b].y) + "\" stroke=\"" +
                   (is_witness ? "#e6a817" : "#444444") + "\" stroke-width=\"" +
                   f(is_witness ? stroke * 2.0 : stroke) + "\"/>\n";
        }
    }

    for (std::size_t i = 0; i < pts.size(); ++i) {
        const char* fill = "#000000";
        if (inst.mode == Mode::Bi)
            fill = inst.color(i) == Color::Blue ? "#1f4fd8" : "#d0342c";
        svg += "<circle cx=\"" + f(pts[i].x) + "\" cy=\"" + f(pts[i].y) + "\" r=\"" +
               f(glyph_r) + "\" fill=\"" + fill + "\"/>\n";
    }

    svg += "</g>\n</svg>\n";
    return svg;
}

}  // namespace ncm
