#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "doctest.h"
#include "smokeml/rng.hpp"

using namespace smokeml;

TEST_SUITE("rng") {

TEST_CASE("same seed reproduces the identical stream") {
    Rng a(1234), b(1234);
    for (int i = 0; i < 100; ++i) {
        CHECK(a.next() == b.next());
    }
    Rng c(1235);
    Rng d(1234);
    bool all_equal = true;
    for (int i = 0; i < 10; ++i) {
        if (c.next() != d.next()) all_equal = false;
    }
    CHECK_FALSE(all_equal);
}

TEST_CASE("uniform stays in [0,1) and fills the interval") {
    Rng rng(7);
    double lo = 1.0, hi = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const double u = rng.uniform();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        lo = std::min(lo, u);
        hi = std::max(hi, u);
    }
    CHECK(lo < 0.01);
    CHECK(hi > 0.99);
}

TEST_CASE("below(n) covers every residue") {
    Rng rng(99);
    std::vector<int> hits(5, 0);
    for (int i = 0; i < 1000; ++i) {
        const std::size_t v = rng.below(5);
        REQUIRE(v < 5);
        ++hits[v];
    }
    for (const int h : hits) CHECK(h > 0);
}

TEST_CASE("gaussian moments are approximately standard normal") {
    Rng rng(2024);
    const int n = 20000;
    double sum = 0.0, sum_sq = 0.0;
    for (int i = 0; i < n; ++i) {
        const double g = rng.gaussian();
        sum += g;
        sum_sq += g * g;
    }
    const double mean = sum / n;
    const double var = sum_sq / n - mean * mean;
    CHECK(std::abs(mean) < 0.05);
    CHECK(std::abs(var - 1.0) < 0.1);
}

TEST_CASE("shuffle permutes and is seed-deterministic") {
    std::vector<int> v(50);
    std::iota(v.begin(), v.end(), 0);
    std::vector<int> w = v;

    Rng a(5);
    a.shuffle(v);
    Rng b(5);
    b.shuffle(w);
    CHECK(v == w);

    std::vector<int> sorted = v;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> expect(50);
    std::iota(expect.begin(), expect.end(), 0);
    CHECK(sorted == expect);
}

TEST_CASE("sample_without_replacement draws k distinct indices below n") {
    Rng rng(11);
    const auto picks = rng.sample_without_replacement(100, 30);
    REQUIRE(picks.size() == 30);
    std::set<std::size_t> uniq(picks.begin(), picks.end());
    CHECK(uniq.size() == 30);
    for (const std::size_t p : picks) CHECK(p < 100);

    // k == n yields a full permutation.
    Rng rng2(11);
    const auto all = rng2.sample_without_replacement(10, 10);
    std::set<std::size_t> uniq_all(all.begin(), all.end());
    CHECK(uniq_all.size() == 10);
}

}  // TEST_SUITE
