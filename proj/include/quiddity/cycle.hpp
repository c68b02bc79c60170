#pragma once

// Quiddity cycles: cyclic integer sequences obtained from (0,0) by rotation,
// reversal and ear insertion. Equivalently, for length >= 3, the vertex
// degree sequences of triangulated convex polygons.
//
// Recognition works by the recursive definition (repeated ear removal down
// to (0,0)); the matrix identity eta(c_1)...eta(c_n) = -id is a consequence
// and is asserted as a certificate in the test suite, not used as the
// definition.

#include "core.hpp"
#include "eta.hpp"

#include <compare>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace quiddity {

namespace detail {

// One greedy ear-removal pass. Any removal order certifies membership, and
// for a valid cycle every order succeeds, so no backtracking is needed.
inline bool reduces_to_base(std::vector<Integer> seq) {
    while (seq.size() > 2) {
        std::size_t ear = seq.size();
        for (std::size_t k = 0; k < seq.size(); ++k) {
            if (seq[k] == 1) { ear = k; break; }
        }
        if (ear == seq.size()) return false;
        const std::size_t n = seq.size();
        seq[(ear + 1) % n] -= 1;
        seq[(ear + n - 1) % n] -= 1;
        seq.erase(seq.begin() + static_cast<std::ptrdiff_t>(ear));
    }
    return seq[0] == 0 && seq[1] == 0;
}

} // namespace detail

inline bool is_quiddity_cycle(const std::vector<Integer>& seq) {
    if (seq.size() < 2) return false;
    if (seq.size() == 2) return seq[0] == 0 && seq[1] == 0;
    for (const Integer& c : seq)
        if (c < 1) return false;
    return detail::reduces_to_base(seq);
}

class QuiddityCycle {
public:
    explicit QuiddityCycle(std::vector<Integer> entries) : entries_(std::move(entries)) {
        if (!is_quiddity_cycle(entries_))
            throw std::invalid_argument("not a quiddity cycle");
    }

    static std::optional<QuiddityCycle> try_make(std::vector<Integer> entries) {
        if (!is_quiddity_cycle(entries)) return std::nullopt;
        return QuiddityCycle(unchecked_tag{}, std::move(entries));
    }

    int length() const { return static_cast<int>(entries_.size()); }
    const std::vector<Integer>& entries() const { return entries_; }

    // 1-based cyclic access: at(0) == at(n), at(n+1) == at(1)
    const Integer& at(int i) const {
        const int n = length();
        int k = (i - 1) % n;
        if (k < 0) k += n;
        return entries_[static_cast<std::size_t>(k)];
    }

    friend bool operator==(const QuiddityCycle&, const QuiddityCycle&) = default;
    friend bool operator<(const QuiddityCycle& l, const QuiddityCycle& r) {
        return l.entries_ < r.entries_;
    }

private:
    struct unchecked_tag {};
    QuiddityCycle(unchecked_tag, std::vector<Integer> entries) : entries_(std::move(entries)) {}

    friend QuiddityCycle cycle_unchecked(std::vector<Integer>);

    std::vector<Integer> entries_;
};

// Internal fast path for generators whose output is valid by construction.
inline QuiddityCycle cycle_unchecked(std::vector<Integer> entries) {
    return QuiddityCycle(QuiddityCycle::unchecked_tag{}, std::move(entries));
}

inline QuiddityCycle rotate(const QuiddityCycle& c, long k) {
    const int n = c.length();
    long s = k % n;
    if (s < 0) s += n;
    std::vector<Integer> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        out.push_back(c.entries()[static_cast<std::size_t>((i + s) % n)]);
    return cycle_unchecked(std::move(out));
}

inline QuiddityCycle reversed(const QuiddityCycle& c) {
    std::vector<Integer> out(c.entries().rbegin(), c.entries().rend());
    return cycle_unchecked(std::move(out));
}

// Positions i (1-based) with c_i = 1.
inline std::vector<int> ears(const QuiddityCycle& c) {
    std::vector<int> out;
    for (int i = 1; i <= c.length(); ++i)
        if (c.at(i) == 1) out.push_back(i);
    return out;
}

// New ear between cyclic positions gap and gap+1; both neighbors gain a
// triangle. The new entry sits at linear position gap+1 (appended for
// gap = n).
inline QuiddityCycle insert_ear(const QuiddityCycle& c, int gap) {
    const int n = c.length();
    if (gap < 1 || gap > n) throw std::invalid_argument("insert_ear: gap out of range");
    std::vector<Integer> out = c.entries();
    if (gap == n) {
        out[static_cast<std::size_t>(n - 1)] += 1;
        out[0] += 1;
        out.push_back(1);
    } else {
        out[static_cast<std::size_t>(gap - 1)] += 1;
        out[static_cast<std::size_t>(gap)] += 1;
        out.insert(out.begin() + gap, Integer(1));
    }
    return cycle_unchecked(std::move(out));
}

inline QuiddityCycle remove_ear(const QuiddityCycle& c, int pos) {
    const int n = c.length();
    if (n < 3) throw std::invalid_argument("remove_ear: cycle too short");
    if (pos < 1 || pos > n) throw std::invalid_argument("remove_ear: position out of range");
    if (c.at(pos) != 1) throw std::invalid_argument("remove_ear: not an ear");
    std::vector<Integer> out = c.entries();
    const std::size_t k = static_cast<std::size_t>(pos - 1);
    out[(k + 1) % out.size()] -= 1;
    out[(k + out.size() - 1) % out.size()] -= 1;
    out.erase(out.begin() + static_cast<std::ptrdiff_t>(k));
    return cycle_unchecked(std::move(out));
}

// Strips all ears of an alternating cycle (c_1,1,c_3,1,...) at once:
// psi(c) = (c_1-2, c_3-2, ...). Bijection A' \ {(1,1,1)} -> A.
inline QuiddityCycle psi(const QuiddityCycle& c) {
    const int n = c.length();
    if (n == 3) throw std::invalid_argument("psi: undefined on (1,1,1)");
    if (n < 4 || n % 2 != 0) throw std::invalid_argument("psi: length must be even and >= 4");
    for (int i = 2; i <= n; i += 2)
        if (c.at(i) != 1) throw std::invalid_argument("psi: even positions must be 1");
    std::vector<Integer> out;
    out.reserve(static_cast<std::size_t>(n / 2));
    for (int i = 1; i <= n; i += 2) out.push_back(c.at(i) - 2);
    return cycle_unchecked(std::move(out));
}

inline QuiddityCycle psi_inv(const QuiddityCycle& c) {
    std::vector<Integer> out;
    out.reserve(static_cast<std::size_t>(2 * c.length()));
    for (const Integer& e : c.entries()) {
        out.push_back(e + 2);
        out.push_back(1);
    }
    return cycle_unchecked(std::move(out));
}

// Fan shape: some rotation equals (n-2, 1, 2, ..., 2, 1); all triangles
// share one vertex. Reflection-invariant, so rotations suffice.
inline bool is_fan_shaped(const QuiddityCycle& c) {
    const int n = c.length();
    if (n < 3) return false;
    std::vector<Integer> pat;
    pat.reserve(static_cast<std::size_t>(n));
    pat.push_back(n - 2);
    pat.push_back(1);
    for (int i = 0; i < n - 3; ++i) pat.push_back(2);
    pat.push_back(1);
    pat.resize(static_cast<std::size_t>(n));  // n = 3: (1,1,1)
    for (int r = 0; r < n; ++r) {
        bool match = true;
        for (int i = 0; i < n && match; ++i)
            match = c.entries()[static_cast<std::size_t>((i + r) % n)] == pat[static_cast<std::size_t>(i)];
        if (match) return true;
    }
    return false;
}

inline QuiddityCycle lex_min_rotation(const QuiddityCycle& c) {
    QuiddityCycle best = c;
    for (int r = 1; r < c.length(); ++r) {
        QuiddityCycle cand = rotate(c, r);
        if (cand < best) best = cand;
    }
    return best;
}

} // namespace quiddity
