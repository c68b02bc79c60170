#pragma once

// Exact planar primitives: integer-coefficient lines a*x + b*y + d = 0 in
// canonical form (gcd(a,b,d) = 1, first nonzero of (a,b) positive) and
// rational points. Sign evaluations cross-multiply denominators so the hot
// paths stay in integer arithmetic.

#include "core.hpp"

#include <optional>
#include <stdexcept>
#include <tuple>

namespace quiddity {

struct RationalPoint {
    Rational x, y;
    friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
    // lowest-then-leftmost: y major, x minor
    friend bool operator<(const RationalPoint& p, const RationalPoint& q) {
        if (p.y != q.y) return p.y < q.y;
        return p.x < q.x;
    }
};

struct IntLine {
    Integer a, b, d;  // { (x,y) : a*x + b*y + d = 0 }

    friend bool operator==(const IntLine&, const IntLine&) = default;
    friend bool operator<(const IntLine& l, const IntLine& r) {
        if (int c = l.a.compare(r.a); c != 0) return c < 0;
        if (int c = l.b.compare(r.b); c != 0) return c < 0;
        return l.d < r.d;
    }
};

inline IntLine make_line(Integer a, Integer b, Integer d) {
    if (a == 0 && b == 0) throw std::invalid_argument("make_line: degenerate coefficients");
    Integer g = gcd(gcd(abs(a), abs(b)), abs(d));
    a /= g; b /= g; d /= g;
    const bool flip = a != 0 ? a < 0 : b < 0;
    if (flip) { a = -a; b = -b; d = -d; }
    return {std::move(a), std::move(b), std::move(d)};
}

// Vertical line x = q and horizontal line y = q.
inline IntLine vertical_line(const Rational& q) { return make_line(den(q), 0, -num(q)); }
inline IntLine horizontal_line(const Rational& q) { return make_line(0, den(q), -num(q)); }

// sign of a*x + b*y + d at p, exactly
inline int side_of(const IntLine& l, const RationalPoint& p) {
    const Integer v = l.a * num(p.x) * den(p.y) + l.b * num(p.y) * den(p.x) +
                      l.d * den(p.x) * den(p.y);
    return v.sign();
}

inline bool contains(const IntLine& l, const RationalPoint& p) { return side_of(l, p) == 0; }

// Intersection point, or nothing for parallel (or equal) lines.
inline std::optional<RationalPoint> intersect(const IntLine& l1, const IntLine& l2) {
    const Integer det = l1.a * l2.b - l2.a * l1.b;
    if (det == 0) return std::nullopt;
    Rational x = make_rational(l1.b * l2.d - l2.b * l1.d, det);
    Rational y = make_rational(l2.a * l1.d - l1.a * l2.d, det);
    return RationalPoint{std::move(x), std::move(y)};
}

struct Rect {
    Rational x0, y0, x1, y1;  // x0 < x1, y0 < y1

    bool contains_half_open(const RationalPoint& p) const {
        return p.x >= x0 && p.x < x1 && p.y >= y0 && p.y < y1;
    }
    Rational width() const { return x1 - x0; }
    Rational height() const { return y1 - y0; }
    Rational area() const { return width() * height(); }
};

inline Rect make_rect(Rational x0, Rational y0, Rational x1, Rational y1) {
    if (!(x0 < x1) || !(y0 < y1)) throw std::invalid_argument("make_rect: degenerate rectangle");
    return {std::move(x0), std::move(y0), std::move(x1), std::move(y1)};
}

} // namespace quiddity
