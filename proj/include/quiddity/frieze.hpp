#pragma once

// Frieze entries phi_i(j) of a quiddity cycle, computed by the three-term
// recurrence
//
//   phi_i(i) = 0,  phi_i(i+1) = 1,
//   phi_i(l) = c_{l-1} * phi_i(l-1) - phi_i(l-2)   (indices cyclic),
//
// which agrees with the (2,1)-entries of partial eta products (the matrix
// definition is kept as a test oracle). On the triangulation, phi_i is the
// additive labeling seeded with 0 at i and 1 at its neighbors.
//
// The argmax sets m_i drive the density notion and the classification of
// dense cycles.

#include "core.hpp"
#include "cycle.hpp"
#include "enumerate.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace quiddity {

// (phi_i(1), ..., phi_i(n)) for 1-based vertex i.
inline std::vector<Integer> phi_row(const QuiddityCycle& c, int i) {
    const int n = c.length();
    if (n < 3) throw std::invalid_argument("phi_row: need length >= 3");
    if (i < 1 || i > n) throw std::invalid_argument("phi_row: vertex out of range");
    std::vector<Integer> row(static_cast<std::size_t>(n));
    auto slot = [&](int k) -> Integer& {
        return row[static_cast<std::size_t>((i - 1 + k) % n)];
    };
    slot(0) = 0;
    slot(1) = 1;
    Integer prev2 = 0, prev1 = 1;
    for (int k = 2; k < n; ++k) {
        Integer next = c.at(i + k - 1) * prev1 - prev2;
        slot(k) = next;
        prev2 = std::move(prev1);
        prev1 = std::move(next);
    }
    return row;
}

class FriezeTable {
public:
    explicit FriezeTable(QuiddityCycle cycle) : cycle_(std::move(cycle)), n_(cycle_.length()) {
        phi_.reserve(static_cast<std::size_t>(n_));
        for (int i = 1; i <= n_; ++i) phi_.push_back(phi_row(cycle_, i));
    }

    const QuiddityCycle& cycle() const { return cycle_; }
    int size() const { return n_; }

    // 1-based vertices
    const Integer& phi(int i, int j) const {
        return phi_[idx(i)][idx(j)];
    }

    // Row k of the frieze, one period: (phi_i(i+k))_{i=1..n} for 0 <= k <= n.
    // Row 0 is all zeros, row 1 all ones, row 2 the shifted cycle; rows n-1
    // and n mirror rows 1 and 0.
    std::vector<Integer> row_period(int k) const {
        if (k < 0 || k > n_) throw std::invalid_argument("row_period: row out of range");
        std::vector<Integer> out;
        out.reserve(static_cast<std::size_t>(n_));
        for (int i = 1; i <= n_; ++i)
            out.push_back(k == n_ ? Integer(0) : phi(i, (i + k - 1) % n_ + 1));
        return out;
    }

    // m_i: vertices where phi_i attains its maximum.
    std::vector<int> max_set(int i) const {
        const auto& row = phi_[idx(i)];
        const Integer mx = *std::max_element(row.begin(), row.end());
        std::vector<int> out;
        for (int j = 1; j <= n_; ++j)
            if (row[idx(j)] == mx) out.push_back(j);
        return out;
    }

    std::vector<std::size_t> max_set_sizes() const {
        std::vector<std::size_t> out;
        out.reserve(static_cast<std::size_t>(n_));
        for (int i = 1; i <= n_; ++i) out.push_back(max_set(i).size());
        return out;
    }

    // Dense: no cyclically adjacent pair i, i+1 with |m_i| = |m_{i+1}| = 1.
    bool dense() const {
        const auto sizes = max_set_sizes();
        for (int i = 0; i < n_; ++i)
            if (sizes[static_cast<std::size_t>(i)] == 1 &&
                sizes[static_cast<std::size_t>((i + 1) % n_)] == 1)
                return false;
        return true;
    }

private:
    std::size_t idx(int i) const {
        if (i < 1 || i > n_) throw std::invalid_argument("FriezeTable: vertex out of range");
        return static_cast<std::size_t>(i - 1);
    }

    QuiddityCycle cycle_;
    int n_;
    std::vector<std::vector<Integer>> phi_;
};

inline FriezeTable frieze_pattern(const QuiddityCycle& c) { return FriezeTable(c); }

inline std::vector<int> m_set(const QuiddityCycle& c, int i) {
    return FriezeTable(c).max_set(i);
}

inline std::vector<std::size_t> m_sizes(const QuiddityCycle& c) {
    return FriezeTable(c).max_set_sizes();
}

inline bool is_dense(const QuiddityCycle& c) { return FriezeTable(c).dense(); }

// All rotation classes (lexicographically minimal representatives) of dense
// cycles with 3 <= length <= max_len, by exhaustive enumeration and density
// filtering. Density is rotation-invariant, so only canonical rotations are
// tested.
inline std::vector<QuiddityCycle> classify_dense(int max_len) {
    if (max_len < 3) throw std::invalid_argument("classify_dense: max_len must be >= 3");
    std::vector<QuiddityCycle> out;
    visit_cycles_up_to(max_len, [&](const QuiddityCycle& c) {
        if (c.length() < 3) return;
        if (c != lex_min_rotation(c)) return;
        if (is_dense(c)) out.push_back(c);
    });
    std::sort(out.begin(), out.end(), [](const QuiddityCycle& a, const QuiddityCycle& b) {
        if (a.length() != b.length()) return a.length() < b.length();
        return a < b;
    });
    return out;
}

// The unique l in [e1, e2) where the rows phi_.(e1) and phi_.(e2) cross:
// phi_j(e1) < phi_j(e2) for e1 <= j < l, phi_l(e1) <= phi_l(e2), and
// phi_j(e1) > phi_j(e2) for l < j <= e2. Uniqueness is asserted.
inline int crossing_index(const QuiddityCycle& c, int e1, int e2) {
    const int n = c.length();
    if (e1 < 1 || e2 > n || e1 >= e2) throw std::invalid_argument("crossing_index: need ears e1 < e2");
    if (c.at(e1) != 1 || c.at(e2) != 1) throw std::invalid_argument("crossing_index: arguments must be ears");
    const auto r1 = phi_row(c, e1);  // phi_j(e1) = phi_{e1}(j)
    const auto r2 = phi_row(c, e2);
    auto cmp = [&](int j) { return r1[static_cast<std::size_t>(j - 1)].compare(r2[static_cast<std::size_t>(j - 1)]); };
    int found = 0, result = 0;
    for (int l = e1; l < e2; ++l) {
        bool ok = cmp(l) <= 0;
        for (int j = e1; j < l && ok; ++j) ok = cmp(j) < 0;
        for (int j = l + 1; j <= e2 && ok; ++j) ok = cmp(j) > 0;
        if (ok) { ++found; result = l; }
    }
    if (found != 1) throw std::logic_error("crossing_index: crossing not unique");
    return result;
}

// Staggered text rendering, one period per row, rows 0..n.
inline std::string render_frieze_text(const FriezeTable& t) {
    const int n = t.size();
    std::size_t width = 1;
    std::vector<std::vector<std::string>> rows;
    for (int k = 0; k <= n; ++k) {
        std::vector<std::string> row;
        for (const Integer& v : t.row_period(k)) {
            row.push_back(v.str());
            width = std::max(width, row.back().size());
        }
        rows.push_back(std::move(row));
    }
    std::ostringstream os;
    const std::string half((width + 1) / 2, ' ');
    for (int k = 0; k <= n; ++k) {
        if (k % 2 == 0) os << half;
        for (std::size_t i = 0; i < rows[static_cast<std::size_t>(k)].size(); ++i) {
            const std::string& s = rows[static_cast<std::size_t>(k)][i];
            if (i > 0) os << ' ';
            os << std::string(width - s.size(), ' ') << s;
        }
        os << '\n';
    }
    return os.str();
}

} // namespace quiddity
