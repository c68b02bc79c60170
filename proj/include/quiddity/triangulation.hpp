#pragma once

// Triangulations of a convex n-gon by non-crossing diagonals, and the
// degree-sequence bijection with quiddity cycles: entry c_i is the number
// of triangles at vertex i, and an ear (c_i = 1) is a triangle with two
// boundary edges, which is what ear removal peels off.

#include "core.hpp"
#include "cycle.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

namespace quiddity {

struct Triangulation {
    int n = 0;
    std::vector<std::array<int, 3>> triangles;      // each sorted, list sorted
    std::vector<std::pair<int, int>> diagonals;     // each sorted, list sorted
    std::vector<std::vector<int>> dual_adjacency;   // triangles sharing a diagonal

    friend bool operator==(const Triangulation& a, const Triangulation& b) {
        return a.n == b.n && a.triangles == b.triangles;
    }
};

namespace detail {

inline bool is_polygon_edge(int u, int v, int n) {  // u < v
    return v == u + 1 || (u == 1 && v == n);
}

inline void fill_derived(Triangulation& t) {
    std::sort(t.triangles.begin(), t.triangles.end());
    std::map<std::pair<int, int>, std::vector<int>> edge_users;
    for (int ti = 0; ti < static_cast<int>(t.triangles.size()); ++ti) {
        const auto& tr = t.triangles[static_cast<std::size_t>(ti)];
        edge_users[{tr[0], tr[1]}].push_back(ti);
        edge_users[{tr[0], tr[2]}].push_back(ti);
        edge_users[{tr[1], tr[2]}].push_back(ti);
    }
    t.diagonals.clear();
    t.dual_adjacency.assign(t.triangles.size(), {});
    for (const auto& [e, users] : edge_users) {
        if (is_polygon_edge(e.first, e.second, t.n)) continue;
        t.diagonals.push_back(e);
        if (users.size() == 2) {
            t.dual_adjacency[static_cast<std::size_t>(users[0])].push_back(users[1]);
            t.dual_adjacency[static_cast<std::size_t>(users[1])].push_back(users[0]);
        }
    }
}

} // namespace detail

inline bool is_valid(const Triangulation& t) {
    if (t.n < 3) return false;
    if (static_cast<int>(t.triangles.size()) != t.n - 2) return false;
    std::map<std::pair<int, int>, int> edge_count;
    for (const auto& tr : t.triangles) {
        if (tr[0] < 1 || tr[2] > t.n) return false;
        if (tr[0] >= tr[1] || tr[1] >= tr[2]) return false;
        edge_count[{tr[0], tr[1]}]++;
        edge_count[{tr[0], tr[2]}]++;
        edge_count[{tr[1], tr[2]}]++;
    }
    std::vector<std::pair<int, int>> diags;
    for (const auto& [e, cnt] : edge_count) {
        if (detail::is_polygon_edge(e.first, e.second, t.n)) {
            if (cnt != 1) return false;
        } else {
            if (cnt != 2) return false;
            diags.push_back(e);
        }
    }
    if (static_cast<int>(diags.size()) != t.n - 3) return false;
    for (std::size_t i = 0; i < diags.size(); ++i)
        for (std::size_t j = i + 1; j < diags.size(); ++j) {
            const auto [a, b] = diags[i];
            const auto [c, d] = diags[j];
            if ((a < c && c < b && b < d) || (c < a && a < d && d < b)) return false;
        }
    return true;
}

// Ear peeling: repeatedly cut off the first vertex of degree one together
// with its neighbors. Original vertex labels are kept throughout.
inline Triangulation to_triangulation(const QuiddityCycle& c) {
    const int n = c.length();
    if (n < 3) throw std::invalid_argument("to_triangulation: need length >= 3");
    std::vector<int> label(static_cast<std::size_t>(n));
    std::vector<Integer> deg = c.entries();
    for (int i = 0; i < n; ++i) label[static_cast<std::size_t>(i)] = i + 1;

    Triangulation t;
    t.n = n;
    auto emit = [&](int u, int v, int w) {
        std::array<int, 3> tr{u, v, w};
        std::sort(tr.begin(), tr.end());
        t.triangles.push_back(tr);
    };
    while (label.size() > 3) {
        const std::size_t m = label.size();
        std::size_t ear = m;
        for (std::size_t k = 0; k < m; ++k)
            if (deg[k] == 1) { ear = k; break; }
        if (ear == m) throw std::logic_error("to_triangulation: no ear found");
        const std::size_t prev = (ear + m - 1) % m;
        const std::size_t next = (ear + 1) % m;
        emit(label[prev], label[ear], label[next]);
        deg[prev] -= 1;
        deg[next] -= 1;
        label.erase(label.begin() + static_cast<std::ptrdiff_t>(ear));
        deg.erase(deg.begin() + static_cast<std::ptrdiff_t>(ear));
    }
    emit(label[0], label[1], label[2]);
    detail::fill_derived(t);
    return t;
}

// Inverse of to_triangulation: read off vertex degrees.
inline QuiddityCycle to_cycle(const Triangulation& t) {
    if (!is_valid(t)) throw std::invalid_argument("to_cycle: invalid triangulation");
    std::vector<Integer> deg(static_cast<std::size_t>(t.n), 0);
    for (const auto& tr : t.triangles)
        for (int v : tr) deg[static_cast<std::size_t>(v - 1)] += 1;
    return QuiddityCycle(std::move(deg));
}

} // namespace quiddity
