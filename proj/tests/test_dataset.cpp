#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "smokeml/dataset.hpp"
#include "smokeml/errors.hpp"
#include "test_util.hpp"

using namespace smokeml;
using namespace smokeml::testutil;

TEST_SUITE("dataset") {

TEST_CASE("constructor validates shape and label values") {
    CHECK_THROWS_AS(make_dataset({{1.0}, {2.0}}, {0}), DataError);
    CHECK_THROWS_AS(make_dataset({{1.0}}, {2}), DataError);
    CHECK_NOTHROW(make_dataset({{1.0}, {2.0}}, {0, 1}));
}

TEST_CASE("csv save/load round-trips exactly, including awkward doubles") {
    TempDir tmp;
    const Dataset d = make_dataset(
        {{0.1, -3.5e300}, {1e-17, 2.0}, {123456.789, -0.0}}, {0, 1, 1});
    const std::string path = tmp.file("round.csv");
    save_dataset(path, d);
    const Dataset back = load_dataset(path, d.schema());
    CHECK((back == d));
}

TEST_CASE("header matching ignores units, spacing, case, and an index column") {
    TempDir tmp;
    const std::string path = tmp.file("kaggle-ish.csv");
    write_file(path,
               ",Temperature[C], humidity[%],NC0.5,Fire Alarm\n"
               "0,20.5,45.0,1.25,1\n"
               "1,-3.25,50.0,0.0,0\n");
    const ColumnSchema schema =
        ColumnSchema::from_names({"Temperature", "Humidity", "NC 0.5"}, "Fire Alarm");
    const Dataset d = load_dataset(path, schema);
    REQUIRE(d.n_rows() == 2);
    REQUIRE(d.n_features() == 3);
    CHECK(d.features()(0, 0) == 20.5);
    CHECK(d.features()(0, 1) == 45.0);
    CHECK(d.features()(0, 2) == 1.25);
    CHECK(d.features()(1, 0) == -3.25);
    CHECK(d.labels() == std::vector<int>{1, 0});
}

TEST_CASE("columns are reordered to schema order regardless of file order") {
    TempDir tmp;
    const std::string path = tmp.file("reordered.csv");
    write_file(path, "y,f1,f0\n1,10,20\n");
    const Dataset d = load_dataset(path, ColumnSchema::from_names({"f0", "f1"}, "y"));
    CHECK(d.features()(0, 0) == 20.0);
    CHECK(d.features()(0, 1) == 10.0);
}

TEST_CASE("missing column raises SchemaError naming the column") {
    TempDir tmp;
    const std::string path = tmp.file("missing.csv");
    write_file(path, "f0,y\n1,0\n");
    try {
        load_dataset(path, ColumnSchema::from_names({"f0", "f1"}, "y"));
        FAIL("expected SchemaError");
    } catch (const SchemaError& e) {
        CHECK(std::string(e.what()).find("f1") != std::string::npos);
    }
}

TEST_CASE("unparsable cell raises ParseError with row and column") {
    TempDir tmp;
    const std::string path = tmp.file("bad.csv");
    write_file(path, "f0,y\n1.0,0\nbogus,1\n");
    try {
        load_dataset(path, ColumnSchema::from_names({"f0"}, "y"));
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("row 2") != std::string::npos);
        CHECK(msg.find("f0") != std::string::npos);
        CHECK(msg.find("bogus") != std::string::npos);
    }
}

TEST_CASE("labels other than 0/1 are rejected at load") {
    TempDir tmp;
    const std::string path = tmp.file("label.csv");
    write_file(path, "f0,y\n1.0,2\n");
    CHECK_THROWS_AS(load_dataset(path, ColumnSchema::from_names({"f0"}, "y")), ParseError);
}

TEST_CASE("clean drops non-finite rows and reports the count") {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    const double inf = std::numeric_limits<double>::infinity();
    const Dataset d = make_dataset({{1.0, 2.0}, {nan, 0.0}, {3.0, inf}, {4.0, 5.0}},
                                   {0, 1, 0, 1});
    const CleanResult r = clean(d);
    CHECK(r.dropped_rows == 2);
    REQUIRE(r.data.n_rows() == 2);
    CHECK(r.data.features()(0, 0) == 1.0);
    CHECK(r.data.features()(1, 0) == 4.0);
    CHECK(r.data.labels() == std::vector<int>{0, 1});

    const CleanResult clean_already = clean(r.data);
    CHECK(clean_already.dropped_rows == 0);
    CHECK(clean_already.data == r.data);

    const Dataset all_bad = make_dataset({{nan}}, {0});
    CHECK_THROWS_AS(clean(all_bad), DataError);
}

TEST_CASE("min_max maps [0,5,10] to [0,0.5,1] and constants to 0") {
    const Dataset d = make_dataset({{0.0, 7.0}, {5.0, 7.0}, {10.0, 7.0}}, {0, 1, 0});
    const NormalizationParams p = fit_normalizer(d, NormalizationMethod::kMinMax);
    const Dataset out = apply_normalizer(d, p);
    CHECK(out.features()(0, 0) == 0.0);
    CHECK(out.features()(1, 0) == 0.5);
    CHECK(out.features()(2, 0) == 1.0);
    for (std::size_t r = 0; r < 3; ++r) CHECK(out.features()(r, 1) == 0.0);
}

TEST_CASE("z_score uses the population standard deviation") {
    const Dataset d = make_dataset({{1.0}, {2.0}, {3.0}}, {0, 1, 0});
    const NormalizationParams p = fit_normalizer(d, NormalizationMethod::kZScore);
    CHECK(p.offsets()[0] == doctest::Approx(2.0));
    CHECK(p.scales()[0] == doctest::Approx(std::sqrt(2.0 / 3.0)));
    const Dataset out = apply_normalizer(d, p);
    CHECK(out.features()(0, 0) == doctest::Approx(-1.2247448714));
    CHECK(out.features()(1, 0) == doctest::Approx(0.0));
    CHECK(out.features()(2, 0) == doctest::Approx(1.2247448714));
}

TEST_CASE("normalizing already min_max-normalized data is the identity") {
    const Dataset d = make_dataset({{0.0}, {2.0}, {8.0}, {10.0}}, {0, 1, 0, 1});
    const Dataset once = apply_normalizer(d, fit_normalizer(d, NormalizationMethod::kMinMax));
    const Dataset twice =
        apply_normalizer(once, fit_normalizer(once, NormalizationMethod::kMinMax));
    for (std::size_t r = 0; r < d.n_rows(); ++r) {
        CHECK(twice.features()(r, 0) == doctest::Approx(once.features()(r, 0)).epsilon(1e-12));
    }
}

TEST_CASE("normalizer applies to unseen rows with the fitted statistics") {
    const Dataset train = make_dataset({{0.0}, {10.0}}, {0, 1});
    const NormalizationParams p = fit_normalizer(train, NormalizationMethod::kMinMax);
    CHECK(p.transform(5.0, 0) == 0.5);
    CHECK(p.transform(20.0, 0) == 2.0);  // outside the fitted range is allowed
    CHECK(p.transform(-10.0, 0) == -1.0);
}

TEST_CASE("split partitions 10 rows into 8 train + 2 test, sorted and disjoint") {
    const Dataset d = make_dataset(
        {{0.}, {1.}, {2.}, {3.}, {4.}, {5.}, {6.}, {7.}, {8.}, {9.}},
        {0, 1, 0, 1, 0, 1, 0, 1, 0, 1});
    const SplitIndices s = train_test_split(d, 0.2, 42);
    REQUIRE(s.test_indices.size() == 2);
    REQUIRE(s.train_indices.size() == 8);
    CHECK(std::is_sorted(s.test_indices.begin(), s.test_indices.end()));
    CHECK(std::is_sorted(s.train_indices.begin(), s.train_indices.end()));

    std::set<std::size_t> all(s.test_indices.begin(), s.test_indices.end());
    all.insert(s.train_indices.begin(), s.train_indices.end());
    CHECK(all.size() == 10);
    CHECK(*all.begin() == 0);
    CHECK(*all.rbegin() == 9);
}

TEST_CASE("split is deterministic per seed and differs across seeds") {
    const Dataset d = make_dataset(
        {{0.}, {1.}, {2.}, {3.}, {4.}, {5.}, {6.}, {7.}, {8.}, {9.}},
        {0, 0, 0, 0, 0, 1, 1, 1, 1, 1});
    const SplitIndices a = train_test_split(d, 0.3, 7);
    const SplitIndices b = train_test_split(d, 0.3, 7);
    CHECK(a.test_indices == b.test_indices);
    CHECK(a.train_indices == b.train_indices);

    bool saw_difference = false;
    for (std::uint64_t seed = 0; seed < 10 && !saw_difference; ++seed) {
        if (train_test_split(d, 0.3, seed).test_indices != a.test_indices) {
            saw_difference = true;
        }
    }
    CHECK(saw_difference);
}

TEST_CASE("test size is round(fraction * n): 89514 rows at 0.2 give 17903") {
    Matrix features(89514, 1);
    for (std::size_t r = 0; r < features.rows(); ++r) features(r, 0) = double(r);
    const Dataset d(ColumnSchema::from_names({"f0"}, "y"), std::move(features),
                    std::vector<int>(89514, 0));
    const SplitIndices s = train_test_split(d, 0.2, 42);
    CHECK(s.test_indices.size() == 17903);
    CHECK(s.train_indices.size() == 89514 - 17903);
}

TEST_CASE("stratified split preserves exact class counts") {
    std::vector<std::vector<double>> rows;
    std::vector<int> labels;
    for (int i = 0; i < 100; ++i) {
        rows.push_back({double(i)});
        labels.push_back(i < 80 ? 0 : 1);
    }
    const Dataset d = make_dataset(rows, labels);
    const SplitIndices s = train_test_split(d, 0.2, 3, /*stratified=*/true);
    REQUIRE(s.test_indices.size() == 20);
    std::size_t pos = 0;
    for (const std::size_t i : s.test_indices) pos += labels[i];
    CHECK(pos == 4);  // 20% of the 20 positives
}

TEST_CASE("split rejects degenerate fractions") {
    const Dataset d = make_dataset({{0.0}, {1.0}}, {0, 1});
    CHECK_THROWS_AS(train_test_split(d, 0.0, 1), ArgumentError);
    CHECK_THROWS_AS(train_test_split(d, 1.0, 1), ArgumentError);
    CHECK_THROWS_AS(train_test_split(d, -0.5, 1), ArgumentError);
}

TEST_CASE("correlation oracle values") {
    SUBCASE("feature equal to the label has r = 1") {
        const Dataset d = make_dataset({{0.0}, {1.0}, {0.0}, {1.0}}, {0, 1, 0, 1});
        const auto corr = feature_target_correlation(d);
        CHECK(corr[0].r == doctest::Approx(1.0));
    }
    SUBCASE("orthogonal feature has r = 0") {
        const Dataset d = make_dataset({{1.0}, {2.0}, {3.0}}, {1, 0, 1});
        const auto corr = feature_target_correlation(d);
        CHECK(corr[0].r == doctest::Approx(0.0));
    }
    SUBCASE("feature equal to 1 - label has r = -1") {
        const Dataset d = make_dataset({{1.0}, {0.0}, {1.0}}, {0, 1, 0});
        const auto corr = feature_target_correlation(d);
        CHECK(corr[0].r == doctest::Approx(-1.0));
    }
    SUBCASE("constant feature yields r = 0") {
        const Dataset d = make_dataset({{5.0}, {5.0}}, {0, 1});
        const auto corr = feature_target_correlation(d);
        CHECK(corr[0].r == 0.0);
    }
}

TEST_CASE("correlations are bounded, complete, and sorted by |r|") {
    const Dataset d = make_dataset(
        {{1.0, 9.0, 0.0}, {2.0, 3.0, 1.0}, {3.0, 7.0, 0.0}, {4.0, 1.0, 1.0}}, {0, 0, 1, 1});
    const auto corr = feature_target_correlation(d);
    REQUIRE(corr.size() == d.n_features());
    for (std::size_t i = 0; i < corr.size(); ++i) {
        CHECK(corr[i].r >= -1.0 - 1e-12);
        CHECK(corr[i].r <= 1.0 + 1e-12);
        if (i > 0) CHECK(std::abs(corr[i - 1].r) >= std::abs(corr[i].r) - 1e-12);
    }

    // Negating a feature negates its correlation.
    Matrix flipped = d.features();
    for (std::size_t r = 0; r < d.n_rows(); ++r) flipped(r, 0) = -flipped(r, 0);
    const Dataset neg(d.schema(), std::move(flipped), d.labels());
    const auto corr_neg = feature_target_correlation(neg);
    const auto find_r = [](const std::vector<FeatureCorrelation>& v, const std::string& name) {
        for (const auto& fc : v) {
            if (fc.feature == name) return fc.r;
        }
        return std::numeric_limits<double>::quiet_NaN();
    };
    CHECK(find_r(corr_neg, "f0") == doctest::Approx(-find_r(corr, "f0")));
}

TEST_CASE("synthetic generator: balanced classes on the default schema") {
    const Dataset d = generate_synthetic(100, 3.0, 7);
    CHECK(d.n_rows() == 200);
    CHECK(d.count_label(0) == 100);
    CHECK(d.count_label(1) == 100);
    CHECK(d.schema() == ColumnSchema::smoke_default());

    // Counters carry no class signal: UTC increments by one, CNT counts rows.
    const auto utc = *d.schema().feature_index("UTC");
    const auto cnt = *d.schema().feature_index("CNT");
    for (std::size_t r = 1; r < d.n_rows(); ++r) {
        CHECK(d.features()(r, utc) - d.features()(r - 1, utc) == 1.0);
        CHECK(d.features()(r, cnt) == double(r));
    }
}

TEST_CASE("synthetic generator is deterministic per seed") {
    const Dataset a = generate_synthetic(50, 2.0, 9);
    const Dataset b = generate_synthetic(50, 2.0, 9);
    CHECK((a == b));
    const Dataset c = generate_synthetic(50, 2.0, 10);
    CHECK_FALSE(a == c);
}

TEST_CASE("synthetic separation widens the class gap") {
    // With zero separation both classes share one distribution; a large
    // separation makes the sensor means differ clearly.
    const Dataset wide = generate_synthetic(200, 6.0, 1);
    const auto temp = *wide.schema().feature_index("Temperature");
    double mean0 = 0.0, mean1 = 0.0;
    for (std::size_t r = 0; r < wide.n_rows(); ++r) {
        (wide.labels()[r] == 0 ? mean0 : mean1) += wide.features()(r, temp);
    }
    mean0 /= 200.0;
    mean1 /= 200.0;
    CHECK(std::abs(mean1 - mean0) > 1.0);

    CHECK_NOTHROW(generate_synthetic(10, 0.0, 1));
    CHECK_THROWS_AS(generate_synthetic(0, 1.0, 1), ArgumentError);
}

TEST_CASE("drop_features removes columns and preserves the rest") {
    const Dataset d = generate_synthetic(10, 1.0, 3);
    const Dataset reduced = d.drop_features({"UTC", "CNT"});
    CHECK(reduced.n_features() == d.n_features() - 2);
    CHECK_FALSE(reduced.schema().feature_index("UTC").has_value());
    const auto temp_old = *d.schema().feature_index("Temperature");
    const auto temp_new = *reduced.schema().feature_index("Temperature");
    for (std::size_t r = 0; r < d.n_rows(); ++r) {
        CHECK(reduced.features()(r, temp_new) == d.features()(r, temp_old));
    }
    CHECK_THROWS_AS(d.drop_features({"NoSuchColumn"}), SchemaError);
}

}  // TEST_SUITE
