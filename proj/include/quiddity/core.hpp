#pragma once

// Shared numeric types. Everything in this library is exact: integers are
// arbitrary precision and rationals are kept in canonical form (reduced,
// positive denominator) by the backend. No floating point appears anywhere
// in the computational kernel.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <utility>

namespace quiddity {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer num(const Rational& q) { return numerator(q); }
inline Integer den(const Rational& q) { return denominator(q); }

// n/d with the sign moved into the numerator; the backend's two-argument
// constructor rejects negative denominators outright.
inline Rational make_rational(Integer n, Integer d) {
    if (d == 0) throw std::invalid_argument("make_rational: zero denominator");
    if (d < 0) { n = -n; d = -d; }
    return Rational(std::move(n), std::move(d));
}

inline int sign_of(const Integer& x) { return x.sign(); }
inline int sign_of(const Rational& q) { return numerator(q).sign(); }

// floor(n/d) for d > 0
inline Integer floor_div(const Integer& n, const Integer& d) {
    Integer q = n / d;
    if (n % d != 0 && (n < 0)) --q;
    return q;
}

inline Integer floor_of(const Rational& q) { return floor_div(num(q), den(q)); }

inline Integer ceil_of(const Rational& q) { return -floor_of(-q); }

inline bool is_integral(const Rational& q) { return den(q) == 1; }

inline std::string to_string(const Integer& x) { return x.str(); }

// "p/q", or just "p" when integral
inline std::string to_string(const Rational& q) {
    if (is_integral(q)) return num(q).str();
    return num(q).str() + "/" + den(q).str();
}

} // namespace quiddity
