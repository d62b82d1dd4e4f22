#include <doctest.h>

#include <stdexcept>
#include <thread>

#include "tqft/census.hpp"
#include "tqft/recursion.hpp"

using namespace tqft;

TEST_CASE("genus one row") {
    for (int p : {5, 7, 11, 13}) {
        const DimTable t = build_table(p, 1);
        for (int c = 0; c < t.d(); ++c) {
            CHECK(t.fe(1, c) == t.d() - c);
            CHECK(t.fo(1, c) == 0);
        }
    }
}

TEST_CASE("known values at p = 5 and 7") {
    const DimTable t = build_table(5, 3);
    CHECK(t.fe(2, 0) == 5);
    CHECK(t.fo(2, 0) == 0);
    CHECK(t.fe(3, 0) == 14);
    CHECK(t.fo(3, 0) == 1);
    CHECK(t.delta(2, 0) == 5);
    CHECK(t.delta(2, 1) == 3);
    CHECK(t.D(3, 0) == 15);
    CHECK(t.delta(3, 0) == 13);
    const DimTable t7 = build_table(7, 2);
    CHECK(t7.fe(2, 0) == 14);
    CHECK(t7.D(2, 0) == 14);
}

TEST_CASE("D_2 at c = 0 is p(p^2-1)/24") {
    for (int p : {5, 7, 11, 13, 17, 19, 23}) {
        const DimTable t = build_table(p, 2);
        CHECK(t.D(2, 0) == p * (p * p - 1) / 24);
        CHECK(t.fo(2, 0) == 0);
    }
}

TEST_CASE("table agrees with the census") {
    for (int p : {5, 7, 11})
        for (int g = 1; g <= 3; ++g) {
            const DimTable t = build_table(p, g);
            for (int c = 0; c < t.d(); ++c) {
                const ParityCounts counts = count_parities(LollipopTree(p, g, c));
                CHECK(t.fe(g, c) == static_cast<unsigned long>(counts.even));
                CHECK(t.fo(g, c) == static_cast<unsigned long>(counts.odd));
            }
        }
}

TEST_CASE("delta routes agree") {
    for (int p : {5, 7, 11, 13, 29}) {
        const DimTable t = build_table(p, 8);
        CHECK_NOTHROW(verify_delta_paths(t));
        const auto a = delta_by_max_kernel(p, 8), b = delta_by_split_sum(p, 8);
        for (int g = 1; g <= 8; ++g)
            for (int c = 0; c < t.d(); ++c) {
                CHECK(a[g][c] == t.delta(g, c));
                CHECK(b[g][c] == t.delta(g, c));
            }
    }
}

TEST_CASE("values stay exact past 64 bits") {
    const DimTable t = build_table(31, 12);
    CHECK(t.D(12, 0) > Integer("18446744073709551616"));
    CHECK_NOTHROW(verify_delta_paths(t));
}

TEST_CASE("bad indices and inputs") {
    const DimTable t = build_table(5, 2);
    CHECK_THROWS_AS(t.fe(3, 0), std::out_of_range);
    CHECK_THROWS_AS(t.fe(0, 0), std::out_of_range);
    CHECK_THROWS_AS(t.fo(1, 2), std::out_of_range);
    CHECK_THROWS_AS(build_table(9, 2), std::invalid_argument);
    CHECK_THROWS_AS(build_table(5, 0), std::invalid_argument);
}

TEST_CASE("cache reuse is thread safe") {
    DimTableCache cache;
    auto big = cache.get(7, 6);
    CHECK(cache.get(7, 3) == big);
    std::vector<std::shared_ptr<const DimTable>> got(4);
    std::vector<std::thread> threads;
    for (int i = 0; i < 4; ++i) threads.emplace_back([&, i] { got[i] = cache.get(11, 5); });
    for (auto& th : threads) th.join();
    for (const auto& t : got) CHECK(t->D(5, 0) == got[0]->D(5, 0));
    CHECK(cache.get(7, 9)->gmax() >= 9);
}
