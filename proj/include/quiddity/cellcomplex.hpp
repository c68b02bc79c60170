#pragma once

// Subdivision of a rectangular window by a finite set of canonical integer
// lines, built by incremental insertion: every new line splits the convex
// faces it crosses. All coordinates are exact rationals; faces are convex
// counterclockwise polygons carrying the supporting line of every edge.
//
// Since distinct canonical lines meet in at most one point, a line that
// crosses the interior of a face always continues into the neighbors, so
// the face soup stays a consistent polygonal complex (no T-vertices) and
// Euler's relation V - E + F = 2 holds with the outer face counted.

#include "core.hpp"
#include "geom.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace quiddity {

namespace detail {

// sign of a*x + b*y + d without materializing a point
inline int sign_at(const IntLine& l, const Rational& x, const Rational& y) {
    const Integer v =
        l.a * num(x) * den(y) + l.b * num(y) * den(x) + l.d * den(x) * den(y);
    return v.sign();
}

} // namespace detail

struct Face {
    std::vector<RationalPoint> verts;   // CCW
    std::vector<IntLine> supports;      // edge i: verts[i] -> verts[(i+1)%k]
    bool clipped = false;               // some edge lies on a non-input line
    Rational min_x, min_y, max_x, max_y;

    void refresh_bbox() {
        min_x = max_x = verts[0].x;
        min_y = max_y = verts[0].y;
        for (const auto& v : verts) {
            if (v.x < min_x) min_x = v.x;
            if (v.x > max_x) max_x = v.x;
            if (v.y < min_y) min_y = v.y;
            if (v.y > max_y) max_y = v.y;
        }
    }

    RationalPoint barycenter() const {
        Rational sx = 0, sy = 0;
        for (const auto& v : verts) { sx += v.x; sy += v.y; }
        const Integer k = static_cast<long>(verts.size());
        return {sx / k, sy / k};
    }

    // doubled signed area; positive for CCW
    Rational area2() const {
        Rational s = 0;
        for (std::size_t i = 0; i < verts.size(); ++i) {
            const auto& u = verts[i];
            const auto& w = verts[(i + 1) % verts.size()];
            s += u.x * w.y - w.x * u.y;
        }
        return s;
    }

    bool contains_strictly(const RationalPoint& p) const {
        for (std::size_t i = 0; i < verts.size(); ++i) {
            const auto& u = verts[i];
            const auto& w = verts[(i + 1) % verts.size()];
            const Rational cr = (w.x - u.x) * (p.y - u.y) - (w.y - u.y) * (p.x - u.x);
            if (!(cr > 0)) return false;
        }
        return true;
    }
};

struct CellComplex {
    Rect window;
    std::vector<IntLine> lines;   // deduplicated canonical input
    std::vector<Face> faces;      // canonical order
    std::size_t vertex_count = 0;
    std::size_t edge_count = 0;

    bool euler_ok() const {
        // +1: the outer face
        return vertex_count + faces.size() + 1 == edge_count + 2;
    }
};

namespace detail {

// Split a convex face along l. Returns false when the face interior does
// not meet l (the face is left untouched).
inline bool split_face(const Face& f, const IntLine& l, Face& out_pos, Face& out_neg) {
    const std::size_t k = f.verts.size();
    // bounding-box reject: the extremes of a*x+b*y over the box sit at two
    // opposite corners (a >= 0 in canonical form)
    {
        const Rational& ylo = l.b >= 0 ? f.min_y : f.max_y;
        const Rational& yhi = l.b >= 0 ? f.max_y : f.min_y;
        if (sign_at(l, f.min_x, ylo) > 0 || sign_at(l, f.max_x, yhi) < 0) return false;
    }
    std::vector<int> s(k);
    bool pos = false, neg = false;
    for (std::size_t i = 0; i < k; ++i) {
        s[i] = side_of(l, f.verts[i]);
        pos |= s[i] > 0;
        neg |= s[i] < 0;
    }
    if (!pos || !neg) return false;

    Face a, b;
    for (std::size_t i = 0; i < k; ++i) {
        if (s[i] >= 0) a.verts.push_back(f.verts[i]);
        if (s[i] <= 0) b.verts.push_back(f.verts[i]);
        const std::size_t j = (i + 1) % k;
        if (s[i] * s[j] < 0) {
            auto p = intersect(l, f.supports[i]);
            if (!p) throw std::logic_error("split_face: crossed edge parallel to cut");
            a.verts.push_back(*p);
            b.verts.push_back(*p);
        }
    }

    auto assign_supports = [&](Face& g) {
        g.supports.resize(g.verts.size());
        for (std::size_t i = 0; i < g.verts.size(); ++i) {
            const auto& u = g.verts[i];
            const auto& w = g.verts[(i + 1) % g.verts.size()];
            if (contains(l, u) && contains(l, w)) {
                g.supports[i] = l;
                continue;
            }
            bool found = false;
            for (const IntLine& cand : f.supports)
                if (contains(cand, u) && contains(cand, w)) {
                    g.supports[i] = cand;
                    found = true;
                    break;
                }
            if (!found) throw std::logic_error("split_face: no supporting line for edge");
        }
        g.refresh_bbox();
    };
    assign_supports(a);
    assign_supports(b);
    out_pos = std::move(a);
    out_neg = std::move(b);
    return true;
}

inline Face window_face(const Rect& w) {
    Face f;
    f.verts = {{w.x0, w.y0}, {w.x1, w.y0}, {w.x1, w.y1}, {w.x0, w.y1}};
    f.supports = {horizontal_line(w.y0), vertical_line(w.x1), horizontal_line(w.y1),
                  vertical_line(w.x0)};
    f.refresh_bbox();
    return f;
}

inline void canonicalize_face(Face& f) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < f.verts.size(); ++i)
        if (f.verts[i] < f.verts[best]) best = i;
    std::rotate(f.verts.begin(), f.verts.begin() + static_cast<std::ptrdiff_t>(best), f.verts.end());
    std::rotate(f.supports.begin(), f.supports.begin() + static_cast<std::ptrdiff_t>(best),
                f.supports.end());
}

} // namespace detail

inline CellComplex build_cell_complex(std::vector<IntLine> lines, const Rect& window) {
    std::sort(lines.begin(), lines.end());
    lines.erase(std::unique(lines.begin(), lines.end()), lines.end());

    std::vector<Face> faces{detail::window_face(window)};
    for (const IntLine& l : lines) {
        std::vector<Face> next;
        next.reserve(faces.size() + 8);
        for (Face& f : faces) {
            Face a, b;
            if (detail::split_face(f, l, a, b)) {
                next.push_back(std::move(a));
                next.push_back(std::move(b));
            } else {
                next.push_back(std::move(f));
            }
        }
        faces = std::move(next);
    }

    CellComplex cc;
    cc.window = window;
    cc.lines = lines;
    const std::set<IntLine> line_set(lines.begin(), lines.end());
    for (Face& f : faces) {
        detail::canonicalize_face(f);
        f.clipped = false;
        for (const IntLine& s : f.supports)
            if (!line_set.count(s)) { f.clipped = true; break; }
    }
    std::sort(faces.begin(), faces.end(), [](const Face& x, const Face& y) {
        return std::lexicographical_compare(x.verts.begin(), x.verts.end(), y.verts.begin(),
                                            y.verts.end());
    });
    cc.faces = std::move(faces);

    std::map<RationalPoint, std::size_t> vid;
    std::set<std::pair<std::size_t, std::size_t>> edges;
    for (const Face& f : cc.faces) {
        std::vector<std::size_t> ids;
        ids.reserve(f.verts.size());
        for (const auto& v : f.verts) ids.push_back(vid.emplace(v, vid.size()).first->second);
        for (std::size_t i = 0; i < ids.size(); ++i) {
            const std::size_t u = ids[i], w = ids[(i + 1) % ids.size()];
            edges.emplace(std::min(u, w), std::max(u, w));
        }
    }
    cc.vertex_count = vid.size();
    cc.edge_count = edges.size();
    return cc;
}

// The unique face whose interior contains p; throws if p lies on an edge.
inline const Face& locate(const CellComplex& cc, const RationalPoint& p) {
    for (const Face& f : cc.faces)
        if (f.contains_strictly(p)) return f;
    throw std::invalid_argument("locate: point not interior to any face");
}

} // namespace quiddity
