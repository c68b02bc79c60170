#include <quiddity/enumerate.hpp>
#include <quiddity/eta.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "oracles.hpp"

using namespace quiddity;
using oracles::cyc;

TEST_CASE("catalan numbers") {
    const std::vector<long long> expected{1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796};
    for (std::size_t k = 0; k < expected.size(); ++k)
        CHECK(catalan(static_cast<int>(k)) == expected[k]);
    CHECK(catalan(30) == Integer("3814986502092304"));
}

TEST_CASE("enumeration matches the Catalan count") {
    CHECK(enumerate_cycles(2) == std::vector<QuiddityCycle>{cyc({0, 0})});
    CHECK(enumerate_cycles(3) == std::vector<QuiddityCycle>{cyc({1, 1, 1})});
    CHECK(enumerate_cycles(4) ==
          std::vector<QuiddityCycle>{cyc({1, 2, 1, 2}), cyc({2, 1, 2, 1})});
    CHECK(enumerate_cycles(7).size() == 42);

    for (int n = 2; n <= 14; ++n) {
        long count = 0;
        visit_cycles(n, [&](const QuiddityCycle&) { ++count; });
        CHECK(Integer(count) == catalan(n - 2));
    }
}

TEST_CASE("enumeration emits each cycle exactly once, lexicographically sorted") {
    for (int n = 2; n <= 9; ++n) {
        const auto all = enumerate_cycles(n);
        std::set<QuiddityCycle> seen(all.begin(), all.end());
        CHECK(seen.size() == all.size());
        CHECK(std::is_sorted(all.begin(), all.end()));
    }
}

TEST_CASE("every enumerated sequence satisfies the product and sum identities") {
    const Mat2 minus_id = -Mat2::identity();
    for (int n = 2; n <= 10; ++n) {
        visit_cycles(n, [&](const QuiddityCycle& c) {
            REQUIRE(eta_product(c.entries()) == minus_id);
            if (n >= 3) {
                const Integer sum = std::accumulate(c.entries().begin(), c.entries().end(),
                                                    Integer(0));
                REQUIRE(sum == 3 * n - 6);
            }
        });
    }
}

TEST_CASE("shards partition the enumeration deterministically") {
    for (int n : {5, 9, 11}) {
        const auto whole = enumerate_cycles(n);
        for (int parts : {2, 3, 5}) {
            std::vector<QuiddityCycle> merged;
            std::size_t total = 0;
            for (int idx = 0; idx < parts; ++idx) {
                visit_cycles(n, [&](const QuiddityCycle& c) { merged.push_back(c); },
                             Shard{idx, parts});
                total = merged.size();
            }
            CHECK(total == whole.size());
            std::sort(merged.begin(), merged.end());
            CHECK(merged == whole);
        }
    }
}

TEST_CASE("visit_cycles_up_to covers every length once") {
    std::map<int, long> per_length;
    visit_cycles_up_to(9, [&](const QuiddityCycle& c) { ++per_length[c.length()]; });
    for (int n = 2; n <= 9; ++n) CHECK(Integer(per_length[n]) == catalan(n - 2));
}
