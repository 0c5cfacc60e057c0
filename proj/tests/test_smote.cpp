#include <algorithm>
#include <cmath>
#include <vector>

#include "doctest.h"
#include "smokeml/errors.hpp"
#include "smokeml/rng.hpp"
#include "smokeml/smote.hpp"
#include "test_util.hpp"

using namespace smokeml;
using namespace smokeml::testutil;

namespace {

// Per-feature bounding box of the minority class rows.
void minority_bounds(const Dataset& d, int minority_label, std::vector<double>& lo,
                     std::vector<double>& hi) {
    lo.assign(d.n_features(), std::numeric_limits<double>::infinity());
    hi.assign(d.n_features(), -std::numeric_limits<double>::infinity());
    for (std::size_t r = 0; r < d.n_rows(); ++r) {
        if (d.labels()[r] != minority_label) continue;
        for (std::size_t c = 0; c < d.n_features(); ++c) {
            lo[c] = std::min(lo[c], d.features()(r, c));
            hi[c] = std::max(hi[c], d.features()(r, c));
        }
    }
}

}  // namespace

TEST_SUITE("smote") {

TEST_CASE("interpolation endpoints and midpoint") {
    const std::vector<double> x = {0.0, 2.0};
    const std::vector<double> nb = {1.0, 4.0};
    CHECK(smote_interpolate(x, nb, 0.0) == x);
    CHECK(smote_interpolate(x, nb, 1.0) == nb);
    const auto mid = smote_interpolate(x, nb, 0.5);
    CHECK(mid[0] == doctest::Approx(0.5));
    CHECK(mid[1] == doctest::Approx(3.0));
}

TEST_CASE("balanced input is returned unchanged") {
    const Dataset d = make_dataset({{0.0}, {1.0}, {2.0}, {3.0}}, {0, 0, 1, 1});
    const Dataset out = smote_oversample(d, {});
    CHECK((out == d));
}

TEST_CASE("oversampling reaches the majority count exactly, label 1 minority") {
    std::vector<std::vector<double>> rows;
    std::vector<int> labels;
    for (int i = 0; i < 20; ++i) {
        rows.push_back({double(i), double(-i)});
        labels.push_back(0);
    }
    for (int i = 0; i < 5; ++i) {
        rows.push_back({double(i) + 0.5, double(i)});
        labels.push_back(1);
    }
    const Dataset d = make_dataset(rows, labels);
    const Dataset out = smote_oversample(d, {.k_neighbors = 3, .seed = 1});
    CHECK(out.count_label(0) == 20);
    CHECK(out.count_label(1) == 20);
    CHECK(out.n_rows() == 40);
}

TEST_CASE("label 0 can be the minority too") {
    std::vector<std::vector<double>> rows;
    std::vector<int> labels;
    for (int i = 0; i < 3; ++i) {
        rows.push_back({double(i)});
        labels.push_back(0);
    }
    for (int i = 0; i < 9; ++i) {
        rows.push_back({double(10 + i)});
        labels.push_back(1);
    }
    const Dataset out = smote_oversample(make_dataset(rows, labels), {.k_neighbors = 2});
    CHECK(out.count_label(0) == 9);
    CHECK(out.count_label(1) == 9);
}

TEST_CASE("original rows are untouched and lead the output") {
    const Dataset d = make_dataset({{0.0}, {1.0}, {2.0}, {3.0}, {10.0}, {11.0}},
                                   {0, 0, 0, 0, 1, 1});
    const Dataset out = smote_oversample(d, {.k_neighbors = 1, .seed = 4});
    REQUIRE(out.n_rows() == 8);
    for (std::size_t r = 0; r < d.n_rows(); ++r) {
        CHECK(out.features().row(r)[0] == d.features().row(r)[0]);
        CHECK(out.labels()[r] == d.labels()[r]);
    }
    // All appended rows carry the minority label.
    for (std::size_t r = d.n_rows(); r < out.n_rows(); ++r) {
        CHECK(out.labels()[r] == 1);
    }
}

TEST_CASE("synthetic rows stay inside the minority bounding box") {
    Rng rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<std::vector<double>> rows;
        std::vector<int> labels;
        const std::size_t n_min = 3 + rng.below(6);
        const std::size_t n_maj = n_min + 5 + rng.below(20);
        for (std::size_t i = 0; i < n_maj; ++i) {
            rows.push_back({rng.uniform() * 10.0, rng.uniform() * 10.0});
            labels.push_back(0);
        }
        for (std::size_t i = 0; i < n_min; ++i) {
            rows.push_back({rng.uniform(), rng.uniform()});
            labels.push_back(1);
        }
        const Dataset d = make_dataset(rows, labels);
        const Dataset out = smote_oversample(d, {.k_neighbors = 5, .seed = trial * 7ull});
        REQUIRE(out.count_label(1) == n_maj);

        std::vector<double> lo, hi;
        minority_bounds(d, 1, lo, hi);
        for (std::size_t r = d.n_rows(); r < out.n_rows(); ++r) {
            for (std::size_t c = 0; c < d.n_features(); ++c) {
                CHECK(out.features()(r, c) >= lo[c] - 1e-12);
                CHECK(out.features()(r, c) <= hi[c] + 1e-12);
            }
        }
    }
}

TEST_CASE("explicit target_count is honored") {
    const Dataset d = make_dataset({{0.0}, {1.0}, {2.0}, {10.0}, {11.0}}, {0, 0, 0, 1, 1});
    const Dataset out = smote_oversample(d, {.k_neighbors = 1, .target_count = 7, .seed = 0});
    CHECK(out.count_label(1) == 7);
    CHECK(out.count_label(0) == 3);
}

TEST_CASE("seeded runs are byte-identical; different seeds differ") {
    const Dataset d = make_dataset({{0.0}, {1.0}, {2.0}, {3.0}, {4.0}, {10.0}, {11.0}, {12.5}},
                                   {0, 0, 0, 0, 0, 1, 1, 1});
    const Dataset a = smote_oversample(d, {.k_neighbors = 2, .seed = 5});
    const Dataset b = smote_oversample(d, {.k_neighbors = 2, .seed = 5});
    CHECK((a == b));
    const Dataset c = smote_oversample(d, {.k_neighbors = 2, .seed = 6});
    CHECK_FALSE(a == c);
}

TEST_CASE("error cases: tiny minority, bad k, bad target") {
    const Dataset one_minority = make_dataset({{0.0}, {1.0}, {2.0}, {3.0}}, {0, 0, 0, 1});
    CHECK_THROWS_AS(smote_oversample(one_minority, {}), DataError);

    const Dataset d = make_dataset({{0.0}, {1.0}, {2.0}, {10.0}, {11.0}}, {0, 0, 0, 1, 1});
    CHECK_THROWS_AS(smote_oversample(d, {.k_neighbors = 0}), ArgumentError);
    CHECK_THROWS_AS(smote_oversample(d, {.k_neighbors = 1, .target_count = 1}), ArgumentError);
}

TEST_CASE("k larger than the minority is clamped rather than fatal") {
    const Dataset d = make_dataset({{0.0}, {1.0}, {2.0}, {3.0}, {10.0}, {11.0}},
                                   {0, 0, 0, 0, 1, 1});
    const Dataset out = smote_oversample(d, {.k_neighbors = 50, .seed = 2});
    CHECK(out.count_label(1) == 4);
}

}  // TEST_SUITE
