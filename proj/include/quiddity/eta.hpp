#pragma once

// 2x2 integer matrices and the generators eta(a), xi(a) of the quiddity
// calculus:
//
//   eta(a) = ( a -1 )        xi(a) = eta(a) * eta(1)
//            ( 1  0 )
//
// Products of eta matrices drive everything downstream: a cyclic sequence
// (c_1,...,c_n) is a quiddity cycle exactly when eta(c_1)...eta(c_n) = -id,
// and the frieze entries are (2,1)-entries of partial products.

#include "core.hpp"

#include <array>
#include <span>

namespace quiddity {

struct Mat2 {
    // row-major entries
    Integer a, b, c, d;

    static Mat2 identity() { return {1, 0, 0, 1}; }

    friend Mat2 operator*(const Mat2& l, const Mat2& r) {
        return {l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d,
                l.c * r.a + l.d * r.c, l.c * r.b + l.d * r.d};
    }

    Mat2 operator-() const { return {-a, -b, -c, -d}; }

    friend bool operator==(const Mat2&, const Mat2&) = default;

    Integer det() const { return a * d - b * c; }

    // (2,1)-entry in 1-based row/column convention
    const Integer& lower_left() const { return c; }
};

inline Mat2 eta(const Integer& a) { return {a, -1, 1, 0}; }

inline Mat2 xi(const Integer& a) { return eta(a) * eta(1); }

inline Mat2 eta_product(std::span<const Integer> seq) {
    Mat2 acc = Mat2::identity();
    for (const Integer& c : seq) acc = acc * eta(c);
    return acc;
}

} // namespace quiddity
