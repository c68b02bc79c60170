#pragma once

// The rank-3 affine arrangement of imaginary type built over a rank-2 root
// system: for the chamber (i, i+1) of a quiddity cycle, the roots are all
// (a, b, d) with (a, b) in the rank-2 system and d an arbitrary integer; the
// imaginary root is (0, 0, 1). On the affine slice z = 1 this is the line
// family { a*x + b*y + d = 0 }, periodic under integer translations because
// (1,0) and (0,1) are roots.
//
// Analyses: chamber counting per fundamental domain, simpliciality of the
// fundamental cells, wall-determinant classes relative to a reference
// chamber, and a truncated check of the crystallographic axiom.

#include "cellcomplex.hpp"
#include "core.hpp"
#include "cycle.hpp"
#include "frieze.hpp"
#include "geom.hpp"
#include "rank2.hpp"

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace quiddity {

struct AffineRootSet {
    QuiddityCycle cycle;
    int chamber = 1;               // rank-2 chamber fixing the embedding
    std::vector<Root2> positive;   // R+ of the rank-2 system, vertex order
};

inline AffineRootSet make_affine_root_set(const QuiddityCycle& c, int chamber = 1) {
    RootSystem2 rs = positive_roots(c, chamber);
    return {rs.cycle, rs.chamber, std::move(rs.roots)};
}

// All lines a*x + b*y + d = 0 with (a,b) a positive root and d ranging so
// that every line meeting the margin-inflated window is included. Roots
// have nonnegative coordinates, so the extremes of a*x + b*y sit at the
// lower-left and upper-right corners.
inline std::vector<IntLine> slice_lines(const AffineRootSet& ars, const Rect& window,
                                        const Rational& margin) {
    if (margin < 0) throw std::invalid_argument("slice_lines: negative margin");
    const Rational X0 = window.x0 - margin, Y0 = window.y0 - margin;
    const Rational X1 = window.x1 + margin, Y1 = window.y1 + margin;
    std::vector<IntLine> lines;
    for (const Root2& r : ars.positive) {
        const Rational lo = r.x * X0 + r.y * Y0;
        const Rational hi = r.x * X1 + r.y * Y1;
        const Integer d_min = ceil_of(-hi);
        const Integer d_max = floor_of(-lo);
        for (Integer d = d_min; d <= d_max; ++d) lines.push_back(make_line(r.x, r.y, d));
    }
    std::sort(lines.begin(), lines.end());
    lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
    return lines;
}

// Window strategy for the slice complex. The standard window [-1,2]^2 keeps
// a full ring of neighboring fundamental domains around [0,1)^2, which the
// periodicity tests rely on; the tight window [0,1]^2 yields exactly the
// same fundamental cells (the lines x=0, x=1, y=0, y=1 are always in the
// family, so no cell straddles the unit square) at a fraction of the cost,
// which matters in exhaustive sweeps.
enum class SliceWindow { standard, tight };

inline CellComplex slice_complex(const AffineRootSet& ars, SliceWindow w) {
    if (w == SliceWindow::standard) {
        const Rect window = make_rect(-1, -1, 2, 2);
        return build_cell_complex(slice_lines(ars, window, 1), window);
    }
    const Rect window = make_rect(0, 0, 1, 1);
    return build_cell_complex(slice_lines(ars, window, 0), window);
}

// Cells whose barycenter lies in the fundamental domain [0,1)^2 of the
// translation lattice, in canonical face order.
inline std::vector<Face> fundamental_cells(const AffineRootSet& ars,
                                           SliceWindow w = SliceWindow::standard) {
    const CellComplex cc = slice_complex(ars, w);
    const Rect domain = make_rect(0, 0, 1, 1);
    std::vector<Face> out;
    for (const Face& f : cc.faces)
        if (domain.contains_half_open(f.barycenter())) out.push_back(f);
    return out;
}

struct Vec3 {
    Integer a, b, d;
    friend bool operator==(const Vec3&, const Vec3&) = default;
};

inline Integer det3(const Vec3& u, const Vec3& v, const Vec3& w) {
    return u.a * (v.b * w.d - v.d * w.b) - u.b * (v.a * w.d - v.d * w.a) +
           u.d * (v.a * w.b - v.b * w.a);
}

struct Chamber3 {
    Face face;
    std::array<IntLine, 3> walls;
    std::array<Vec3, 3> normals;  // primitive, inward at the barycenter
    Integer det_abs;
};

inline Chamber3 make_chamber(const Face& f) {
    if (f.verts.size() != 3) throw std::invalid_argument("make_chamber: cell is not a triangle");
    Chamber3 ch;
    ch.face = f;
    const RationalPoint bc = f.barycenter();
    for (std::size_t i = 0; i < 3; ++i) {
        const IntLine& l = f.supports[i];
        ch.walls[i] = l;
        const int s = side_of(l, bc);
        if (s == 0) throw std::logic_error("make_chamber: barycenter on a wall");
        ch.normals[i] = s > 0 ? Vec3{l.a, l.b, l.d} : Vec3{-l.a, -l.b, -l.d};
    }
    ch.det_abs = abs(det3(ch.normals[0], ch.normals[1], ch.normals[2]));
    return ch;
}

struct SimplicialCheck {
    bool simplicial = false;
    std::optional<Face> witness;  // first non-triangular fundamental cell
};

inline SimplicialCheck is_simplicial_affine(const QuiddityCycle& c, int chamber,
                                            SliceWindow w = SliceWindow::standard) {
    for (const Face& f : fundamental_cells(make_affine_root_set(c, chamber), w))
        if (f.verts.size() != 3) return {false, f};
    return {true, std::nullopt};
}

struct DeterminantClasses {
    // base-change determinant |det(reference)| / |det(cell)| -> cell count;
    // the reference chamber has minimal |det|, so ratios are <= 1
    std::map<Rational, std::size_t> histogram;
    Integer reference_det;
    std::size_t cell_count = 0;
};

inline DeterminantClasses determinant_classes(const QuiddityCycle& c, int chamber,
                                              SliceWindow w = SliceWindow::standard) {
    const auto cells = fundamental_cells(make_affine_root_set(c, chamber), w);
    std::vector<Integer> dets;
    dets.reserve(cells.size());
    for (const Face& f : cells) dets.push_back(make_chamber(f).det_abs);
    DeterminantClasses out;
    out.cell_count = cells.size();
    if (dets.empty()) return out;
    out.reference_det = *std::min_element(dets.begin(), dets.end());
    for (const Integer& d : dets) ++out.histogram[make_rational(out.reference_det, d)];
    return out;
}

struct CaViolation {
    std::size_t cell_index = 0;
    Vec3 root;
    std::array<Rational, 3> coords;
};

struct CaCheck {
    bool crystallographic = false;  // no violation up to the truncation depth
    int d_bound = 0;
    std::optional<CaViolation> witness;
};

// Expresses every truncated root (a, b, d), |d| <= d_bound, in the wall
// basis of every fundamental chamber. A violation (non-integral or
// mixed-sign coordinates) is conclusive; a pass only certifies the
// truncation. Sign symmetry of the root set makes checking the positive
// half sufficient.
inline CaCheck crystallographic_check(const QuiddityCycle& c, int chamber, int d_bound,
                                      SliceWindow w = SliceWindow::standard) {
    if (d_bound < 2) throw std::invalid_argument("crystallographic_check: d_bound must be >= 2");
    const AffineRootSet ars = make_affine_root_set(c, chamber);
    const auto cells = fundamental_cells(ars, w);
    std::vector<Chamber3> chambers;
    chambers.reserve(cells.size());
    for (const Face& f : cells) chambers.push_back(make_chamber(f));

    for (std::size_t ci = 0; ci < chambers.size(); ++ci) {
        const Chamber3& ch = chambers[ci];
        const Integer det = det3(ch.normals[0], ch.normals[1], ch.normals[2]);
        for (const Root2& r : ars.positive) {
            for (Integer d = -d_bound; d <= d_bound; ++d) {
                const Vec3 gamma{r.x, r.y, d};
                std::array<Rational, 3> x;
                x[0] = make_rational(det3(gamma, ch.normals[1], ch.normals[2]), det);
                x[1] = make_rational(det3(ch.normals[0], gamma, ch.normals[2]), det);
                x[2] = make_rational(det3(ch.normals[0], ch.normals[1], gamma), det);
                bool integral = true, has_pos = false, has_neg = false;
                for (const Rational& xi : x) {
                    integral &= is_integral(xi);
                    has_pos |= xi > 0;
                    has_neg |= xi < 0;
                }
                if (!integral || (has_pos && has_neg))
                    return {false, d_bound, CaViolation{ci, gamma, x}};
            }
        }
    }
    return {true, d_bound, std::nullopt};
}

// Count of roots (a, b, 1) attaining the maximal second coordinate, in the
// coordinates adapted to the chamber left of vertex i; equals |m_i|.
inline std::size_t m_alpha(const QuiddityCycle& c, int i) {
    const int n = c.length();
    if (i < 1 || i > n) throw std::invalid_argument("m_alpha: vertex out of range");
    const int left = (i + n - 2) % n + 1;  // chamber (i-1, i)
    const RootSystem2 rs = positive_roots(c, left);
    Integer b1 = 0;
    for (const Root2& r : rs.roots)
        if (r.y > b1) b1 = r.y;
    std::size_t count = 0;
    for (const Root2& r : rs.roots)
        if (r.y == b1) ++count;
    return count;
}

} // namespace quiddity
