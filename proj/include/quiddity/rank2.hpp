#pragma once

// Rank-2 root systems attached to a quiddity cycle: at the chamber given by
// the adjacent vertex pair (i, i+1), the positive roots are
//
//   R+ = { (phi_i(j), phi_{i+1}(j)) : j = 1..n },
//
// ordered componentwise. Every cycle admits a chamber whose root poset has a
// unique maximal element; for non-dense cycles one can even find a chamber
// whose maximum strictly dominates all other roots.

#include "core.hpp"
#include "cycle.hpp"
#include "frieze.hpp"

#include <algorithm>
#include <vector>

namespace quiddity {

struct Root2 {
    Integer x, y;
    friend bool operator==(const Root2&, const Root2&) = default;
    friend bool operator<(const Root2& a, const Root2& b) {
        if (int c = a.x.compare(b.x); c != 0) return c < 0;
        return a.y < b.y;
    }
};

inline bool poset_leq(const Root2& r, const Root2& s) { return r.x <= s.x && r.y <= s.y; }

inline bool strictly_less(const Root2& r, const Root2& s) { return r.x < s.x && r.y < s.y; }

struct RootSystem2 {
    QuiddityCycle cycle;
    int chamber = 1;             // left vertex of the pair (i, i+1)
    std::vector<Root2> roots;    // roots[j-1] labels vertex j
};

inline RootSystem2 positive_roots(const QuiddityCycle& c, int i) {
    const int n = c.length();
    if (n < 3) throw std::invalid_argument("positive_roots: need length >= 3");
    if (i < 1 || i > n) throw std::invalid_argument("positive_roots: chamber out of range");
    const auto left = phi_row(c, i);
    const auto right = phi_row(c, i % n + 1);
    RootSystem2 rs{c, i, {}};
    rs.roots.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
        rs.roots.push_back({left[static_cast<std::size_t>(j)], right[static_cast<std::size_t>(j)]});
    return rs;
}

// Maximal elements of the componentwise order, sorted.
inline std::vector<Root2> maximal_roots(const RootSystem2& rs) {
    std::vector<Root2> out;
    for (const Root2& r : rs.roots) {
        bool dominated = false;
        for (const Root2& s : rs.roots)
            if (!(s == r) && poset_leq(r, s)) { dominated = true; break; }
        if (!dominated) out.push_back(r);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

struct MaxChamber {
    int chamber = 0;
    Root2 max;
    bool strict = false;  // max strictly dominates every other root
};

// Smallest chamber index whose root poset has a unique maximal element; for
// non-dense cycles, the smallest one whose maximum is strictly dominating.
inline MaxChamber unique_max_chamber(const QuiddityCycle& c) {
    const bool need_strict = !is_dense(c);
    for (int i = 1; i <= c.length(); ++i) {
        const RootSystem2 rs = positive_roots(c, i);
        const auto maxima = maximal_roots(rs);
        if (maxima.size() != 1) continue;
        bool strict = true;
        for (const Root2& r : rs.roots)
            if (!(r == maxima[0]) && !strictly_less(r, maxima[0])) { strict = false; break; }
        if (need_strict && !strict) continue;
        return {i, maxima[0], strict};
    }
    throw std::logic_error("unique_max_chamber: no admissible chamber found");
}

} // namespace quiddity
