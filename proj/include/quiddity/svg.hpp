#pragma once

// Static SVG output: triangulated polygons with their quiddity labels, and
// affine slice arrangements with the fundamental cells outlined. Exact
// rational coordinates are converted to fixed-point decimals with integer
// arithmetic, so output is byte-deterministic.

#include "affine.hpp"
#include "cellcomplex.hpp"
#include "core.hpp"
#include "cycle.hpp"
#include "triangulation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

namespace quiddity {

namespace detail {

// q rendered with exactly two decimals, rounded half away from zero
inline std::string decimal2(const Rational& q) {
    const bool neg = num(q) < 0;
    const Integer mag = floor_div(abs(num(q)) * 200 + den(q), 2 * den(q));
    const Integer whole = mag / 100;
    const int frac = static_cast<int>(mag % 100);
    char buf[16];
    std::snprintf(buf, sizeof buf, ".%02d", frac);
    return (neg && mag != 0 ? "-" : "") + whole.str() + buf;
}

inline std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

} // namespace detail

// Regular n-gon with vertex labels c_i (vertex 1 at the top, counted
// clockwise) and the triangulation's diagonals drawn inside.
inline std::string render_triangulation_svg(const QuiddityCycle& c, double scale = 120.0) {
    const Triangulation t = to_triangulation(c);
    const int n = t.n;
    const double cx = 1.4 * scale, cy = 1.4 * scale, r = scale;
    std::vector<double> px(static_cast<std::size_t>(n)), py(static_cast<std::size_t>(n));
    const double pi = 3.14159265358979323846;
    for (int i = 0; i < n; ++i) {
        const double ang = -pi / 2 + 2 * pi * i / n;
        px[static_cast<std::size_t>(i)] = cx + r * std::cos(ang);
        py[static_cast<std::size_t>(i)] = cy + r * std::sin(ang);
    }
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << detail::fmt(2.8 * scale)
       << "\" height=\"" << detail::fmt(2.8 * scale) << "\" viewBox=\"0 0 "
       << detail::fmt(2.8 * scale) << " " << detail::fmt(2.8 * scale) << "\">\n";
    os << "<g stroke=\"black\" stroke-width=\"1\" fill=\"none\">\n";
    os << "<polygon points=\"";
    for (int i = 0; i < n; ++i) {
        if (i) os << ' ';
        os << detail::fmt(px[static_cast<std::size_t>(i)]) << ','
           << detail::fmt(py[static_cast<std::size_t>(i)]);
    }
    os << "\"/>\n";
    for (const auto& [u, v] : t.diagonals)
        os << "<line x1=\"" << detail::fmt(px[static_cast<std::size_t>(u - 1)]) << "\" y1=\""
           << detail::fmt(py[static_cast<std::size_t>(u - 1)]) << "\" x2=\""
           << detail::fmt(px[static_cast<std::size_t>(v - 1)]) << "\" y2=\""
           << detail::fmt(py[static_cast<std::size_t>(v - 1)]) << "\"/>\n";
    os << "</g>\n<g font-family=\"sans-serif\" font-size=\"" << detail::fmt(0.12 * scale)
       << "\" text-anchor=\"middle\">\n";
    for (int i = 0; i < n; ++i) {
        const double lx = cx + 1.13 * (px[static_cast<std::size_t>(i)] - cx);
        const double ly = cy + 1.13 * (py[static_cast<std::size_t>(i)] - cy);
        os << "<text x=\"" << detail::fmt(lx) << "\" y=\"" << detail::fmt(ly + 0.04 * scale)
           << "\">" << c.at(i + 1).str() << "</text>\n";
    }
    os << "</g>\n</svg>\n";
    return os.str();
}

// The slice arrangement over `window`, fundamental cells outlined.
inline std::string render_arrangement_svg(const QuiddityCycle& c, int chamber,
                                          const Rect& window, const Rational& scale) {
    if (scale <= 0) throw std::invalid_argument("render_arrangement_svg: scale must be positive");
    const AffineRootSet ars = make_affine_root_set(c, chamber);
    const CellComplex cc = build_cell_complex(slice_lines(ars, window, 0), window);

    auto X = [&](const Rational& x) { return detail::decimal2((x - window.x0) * scale); };
    auto Y = [&](const Rational& y) { return detail::decimal2((window.y1 - y) * scale); };

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
       << detail::decimal2(window.width() * scale) << "\" height=\""
       << detail::decimal2(window.height() * scale) << "\">\n";
    os << "<g stroke=\"#444444\" stroke-width=\"1\">\n";
    for (const IntLine& l : cc.lines) {
        // clip the line to the window by intersecting with the boundary
        std::vector<RationalPoint> hits;
        const IntLine bounds[4] = {vertical_line(window.x0), vertical_line(window.x1),
                                   horizontal_line(window.y0), horizontal_line(window.y1)};
        for (const IntLine& b : bounds) {
            auto p = intersect(l, b);
            if (!p) continue;
            if (p->x < window.x0 || p->x > window.x1 || p->y < window.y0 || p->y > window.y1)
                continue;
            if (std::find(hits.begin(), hits.end(), *p) == hits.end()) hits.push_back(*p);
        }
        if (hits.size() < 2) continue;
        std::sort(hits.begin(), hits.end());
        const RationalPoint& s = hits.front();
        const RationalPoint& e = hits.back();
        os << "<line x1=\"" << X(s.x) << "\" y1=\"" << Y(s.y) << "\" x2=\"" << X(e.x)
           << "\" y2=\"" << Y(e.y) << "\"/>\n";
    }
    os << "</g>\n<g stroke=\"#cc3333\" stroke-width=\"2\" fill=\"none\">\n";
    const Rect domain = make_rect(0, 0, 1, 1);
    for (const Face& f : cc.faces) {
        if (!domain.contains_half_open(f.barycenter())) continue;
        os << "<polygon points=\"";
        for (std::size_t i = 0; i < f.verts.size(); ++i) {
            if (i) os << ' ';
            os << X(f.verts[i].x) << ',' << Y(f.verts[i].y);
        }
        os << "\"/>\n";
    }
    os << "</g>\n</svg>\n";
    return os.str();
}

} // namespace quiddity
