#pragma once

// Exhaustive enumeration of quiddity cycles by ear insertion.
//
// Duplicates are avoided structurally instead of with a global seen-set:
// every cycle of length >= 3 has a first ear at some position e >= 2, and
// removing it gives a canonical parent. A child generated by inserting an
// ear at gap g is kept only when its first ear at position >= 2 is exactly
// g+1, so each cycle appears exactly once in the generation tree. This keeps
// the search tree deterministic and partitionable for parallel sweeps.

#include "core.hpp"
#include "cycle.hpp"

#include <algorithm>
#include <functional>
#include <vector>

namespace quiddity {

inline Integer catalan(int k) {
    if (k < 0) throw std::invalid_argument("catalan: negative index");
    Integer c = 1;
    for (int i = 0; i < k; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
    return c;
}

struct Shard {
    int index = 0;
    int count = 1;
};

namespace detail {

// Kept children of `seq`: insert_ear at gap g, accepted when positions
// 2..g of the child carry no 1 (so the new ear at g+1 is the first ear
// at position >= 2).
template <typename Fn>
void expand_children(const std::vector<Integer>& seq, Fn&& fn) {
    const int m = static_cast<int>(seq.size());
    for (int g = 1; g <= m; ++g) {
        std::vector<Integer> child;
        child.reserve(seq.size() + 1);
        if (g == m) {
            child = seq;
            child[0] += 1;
            child[static_cast<std::size_t>(m - 1)] += 1;
            child.push_back(1);
        } else {
            child.assign(seq.begin(), seq.begin() + g);
            child[static_cast<std::size_t>(g - 1)] += 1;
            child.push_back(1);
            child.push_back(seq[static_cast<std::size_t>(g)] + 1);
            child.insert(child.end(), seq.begin() + g + 1, seq.end());
        }
        bool keep = true;
        for (int p = 2; p <= g && keep; ++p)
            keep = child[static_cast<std::size_t>(p - 1)] != 1;
        if (keep) fn(child);
    }
}

inline void visit_impl(const std::vector<Integer>& seq, int max_length, bool all_lengths,
                       const std::function<void(const QuiddityCycle&)>& fn, int shard_level,
                       const Shard& shard, long& level_counter) {
    const int m = static_cast<int>(seq.size());
    if (m == shard_level) {
        const long idx = level_counter++;
        if (idx % shard.count != shard.index) return;
    }
    if (all_lengths || m == max_length) fn(cycle_unchecked(seq));
    if (m >= max_length) return;
    expand_children(seq, [&](const std::vector<Integer>& child) {
        visit_impl(child, max_length, all_lengths, fn, shard_level, shard, level_counter);
    });
}

} // namespace detail

// All cycles of the given length, rotations counted as distinct.
inline void visit_cycles(int length, const std::function<void(const QuiddityCycle&)>& fn,
                         Shard shard = {}) {
    if (length < 2) throw std::invalid_argument("visit_cycles: length must be >= 2");
    if (shard.count < 1 || shard.index < 0 || shard.index >= shard.count)
        throw std::invalid_argument("visit_cycles: bad shard");
    const int shard_level = std::min(length, 7);
    long counter = 0;
    detail::visit_impl({0, 0}, length, false, fn, shard.count == 1 ? -1 : shard_level, shard,
                       counter);
}

// Every cycle of every length from 2 to max_length, in generation order.
inline void visit_cycles_up_to(int max_length,
                               const std::function<void(const QuiddityCycle&)>& fn) {
    if (max_length < 2) throw std::invalid_argument("visit_cycles_up_to: length must be >= 2");
    long counter = 0;
    detail::visit_impl({0, 0}, max_length, true, fn, -1, Shard{}, counter);
}

// Lexicographically sorted list. |result| = catalan(length - 2).
inline std::vector<QuiddityCycle> enumerate_cycles(int length) {
    std::vector<QuiddityCycle> out;
    visit_cycles(length, [&](const QuiddityCycle& c) { out.push_back(c); });
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace quiddity
