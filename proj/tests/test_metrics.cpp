#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "smokeml/errors.hpp"
#include "smokeml/knn.hpp"
#include "smokeml/metrics.hpp"
#include "smokeml/rng.hpp"
#include "test_util.hpp"

using namespace smokeml;
using namespace smokeml::testutil;

namespace {

// The reference confusion matrix every report format is checked against:
// tp=8997, fn=2, fp=1, tn=8903 (17903 test rows).
ConfusionMatrix reference_cm() { return {.tp = 8997, .fp = 1, .fn = 2, .tn = 8903}; }

}  // namespace

TEST_SUITE("metrics") {

TEST_CASE("confusion cross-tabulates labels against predictions") {
    const ConfusionMatrix cm = confusion({1, 1, 0, 0}, {1, 0, 0, 1});
    CHECK(cm.tp == 1);
    CHECK(cm.fn == 1);
    CHECK(cm.tn == 1);
    CHECK(cm.fp == 1);
    CHECK(cm.total() == 4);
    CHECK_THROWS_AS(confusion({1}, {1, 0}), ArgumentError);
    CHECK_THROWS_AS(confusion({}, {}), ArgumentError);
}

TEST_CASE("reference matrix reproduces the published six metrics") {
    const EvalReport r = metrics_from_cm(reference_cm());
    CHECK(std::abs(r.accuracy - 0.999832) <= 1e-6);
    CHECK(std::abs(r.f1 - 0.999833) <= 1e-6);
    CHECK(std::abs(r.mcc - 0.999665) <= 1e-6);
    // Matrix-derived values for the remaining three.
    CHECK(std::abs(r.precision - 0.999889) <= 1e-6);
    CHECK(std::abs(r.recall - 0.999778) <= 1e-6);
    CHECK(std::abs(r.kappa - 0.999665) <= 1e-6);
    // Counts alone cannot produce a ranking metric.
    CHECK(r.is_undefined("auc"));
}

TEST_CASE("perfect and anti-perfect matrices") {
    const EvalReport perfect = metrics_from_cm({.tp = 1, .fp = 0, .fn = 0, .tn = 1});
    CHECK(perfect.accuracy == 1.0);
    CHECK(perfect.precision == 1.0);
    CHECK(perfect.recall == 1.0);
    CHECK(perfect.f1 == 1.0);
    CHECK(perfect.kappa == 1.0);
    CHECK(perfect.mcc == 1.0);

    const EvalReport worst = metrics_from_cm({.tp = 0, .fp = 1, .fn = 1, .tn = 0});
    CHECK(worst.accuracy == 0.0);
    CHECK(worst.mcc == doctest::Approx(-1.0));
    CHECK(worst.kappa == doctest::Approx(-1.0));
}

TEST_CASE("zero denominators report 0 with a flag") {
    // No positive predictions and no true positives.
    const EvalReport r = metrics_from_cm({.tp = 0, .fp = 0, .fn = 5, .tn = 5});
    CHECK(r.precision == 0.0);
    CHECK(r.is_undefined("precision"));
    CHECK(r.f1 == 0.0);
    CHECK(r.is_undefined("f1"));
    CHECK(r.mcc == 0.0);
    CHECK(r.is_undefined("mcc"));
    CHECK(r.recall == 0.0);  // 0/5: defined, just zero
    CHECK_FALSE(r.is_undefined("recall"));
    CHECK(r.accuracy == 0.5);
}

TEST_CASE("empty or negative matrices are rejected") {
    CHECK_THROWS_AS(metrics_from_cm({}), ArgumentError);
    CHECK_THROWS_AS(metrics_from_cm({.tp = -1, .fp = 0, .fn = 0, .tn = 2}), ArgumentError);
}

TEST_CASE("kappa and mcc are invariant under uniform count scaling") {
    const ConfusionMatrix base = {.tp = 40, .fp = 7, .fn = 3, .tn = 50};
    const ConfusionMatrix scaled = {.tp = 40000, .fp = 7000, .fn = 3000, .tn = 50000};
    const EvalReport a = metrics_from_cm(base);
    const EvalReport b = metrics_from_cm(scaled);
    CHECK(a.accuracy == doctest::Approx(b.accuracy).epsilon(1e-12));
    CHECK(a.precision == doctest::Approx(b.precision).epsilon(1e-12));
    CHECK(a.recall == doctest::Approx(b.recall).epsilon(1e-12));
    CHECK(a.f1 == doctest::Approx(b.f1).epsilon(1e-12));
    CHECK(a.kappa == doctest::Approx(b.kappa).epsilon(1e-12));
    CHECK(a.mcc == doctest::Approx(b.mcc).epsilon(1e-12));
}

TEST_CASE("inverting every prediction negates mcc") {
    const ConfusionMatrix cm = {.tp = 40, .fp = 7, .fn = 3, .tn = 50};
    const ConfusionMatrix inverted = {.tp = cm.fn, .fp = cm.tn, .fn = cm.tp, .tn = cm.fp};
    CHECK(metrics_from_cm(inverted).mcc == doctest::Approx(-metrics_from_cm(cm).mcc));
}

TEST_CASE("f1 lies between precision and recall") {
    Rng rng(27);
    for (int i = 0; i < 100; ++i) {
        const ConfusionMatrix cm = {.tp = std::int64_t(1 + rng.below(50)),
                                    .fp = std::int64_t(rng.below(50)),
                                    .fn = std::int64_t(rng.below(50)),
                                    .tn = std::int64_t(rng.below(50))};
        const EvalReport r = metrics_from_cm(cm);
        CHECK(r.f1 >= std::min(r.precision, r.recall) - 1e-12);
        CHECK(r.f1 <= std::max(r.precision, r.recall) + 1e-12);
    }
}

}  // TEST_SUITE

TEST_SUITE("auc") {

TEST_CASE("hand-counted pair statistic") {
    const double auc = auc_roc({0.1, 0.4, 0.35, 0.8}, {0, 0, 1, 1});
    CHECK(auc == doctest::Approx(0.75));  // 3 of 4 pos/neg pairs ranked correctly
}

TEST_CASE("perfect, inverted, and tied rankings") {
    CHECK(auc_roc({0.1, 0.2, 0.8, 0.9}, {0, 0, 1, 1}) == doctest::Approx(1.0));
    CHECK(auc_roc({0.9, 0.8, 0.2, 0.1}, {0, 0, 1, 1}) == doctest::Approx(0.0));
    CHECK(auc_roc({0.5, 0.5}, {0, 1}) == doctest::Approx(0.5));
    CHECK(auc_roc({0.3, 0.3, 0.3, 0.3}, {0, 1, 0, 1}) == doctest::Approx(0.5));
}

TEST_CASE("invariant under strictly monotone score transforms") {
    Rng rng(88);
    std::vector<double> scores;
    std::vector<int> labels;
    for (int i = 0; i < 60; ++i) {
        scores.push_back(rng.uniform());
        labels.push_back(int(rng.below(2)));
    }
    labels[0] = 0;
    labels[1] = 1;
    const double base = auc_roc(scores, labels);

    std::vector<double> cubed = scores;
    for (auto& s : cubed) s = s * s * s;
    CHECK(auc_roc(cubed, labels) == doctest::Approx(base).epsilon(1e-12));

    std::vector<double> shifted = scores;
    for (auto& s : shifted) s = 10.0 * s - 3.0;
    CHECK(auc_roc(shifted, labels) == doctest::Approx(base).epsilon(1e-12));
}

TEST_CASE("complementing the scores reflects the auc") {
    const std::vector<double> scores = {0.1, 0.7, 0.7, 0.3, 0.9};
    const std::vector<int> labels = {0, 1, 0, 1, 1};
    std::vector<double> flipped = scores;
    for (auto& s : flipped) s = 1.0 - s;
    CHECK(auc_roc(flipped, labels) == doctest::Approx(1.0 - auc_roc(scores, labels)));
}

TEST_CASE("degenerate inputs are rejected") {
    CHECK_THROWS_AS(auc_roc({0.5, 0.6}, {1, 1}), ArgumentError);
    CHECK_THROWS_AS(auc_roc({0.5}, {0, 1}), ArgumentError);
}

}  // TEST_SUITE

TEST_SUITE("evaluation_reports") {

TEST_CASE("evaluate_model fills the matrix, metrics, scores, and real auc") {
    const Dataset d = make_dataset({{0.0}, {1.0}, {10.0}, {11.0}}, {0, 0, 1, 1});
    const auto m = KnnClassifier::fit(d, {.k = 1});
    const EvaluationResult res = evaluate_model(m, d);
    CHECK(res.cm.tp == 2);
    CHECK(res.cm.tn == 2);
    CHECK(res.cm.fp == 0);
    CHECK(res.cm.fn == 0);
    CHECK(res.report.accuracy == 1.0);
    CHECK(res.report.auc == 1.0);
    CHECK_FALSE(res.report.is_undefined("auc"));
    REQUIRE(res.scores.size() == 4);
    CHECK(res.scores[0] == 0.0);
    CHECK(res.scores[2] == 1.0);
}

TEST_CASE("format_metric renders six decimals") {
    CHECK(format_metric(0.5) == "0.500000");
    CHECK(format_metric(0.9998326) == "0.999833");
    CHECK(format_metric(-1.0) == "-1.000000");
}

TEST_CASE("csv header and row shape") {
    CHECK(report_csv_header() == "model,accuracy,precision,recall,f1,auc,kappa,mcc,tp,fp,fn,tn");
    const EvalReport r = metrics_from_cm(reference_cm());
    const std::string row = report_csv_row("knn", r, reference_cm());
    CHECK(row.substr(0, 4) == "knn,");
    CHECK(row.find("0.999832") != std::string::npos);
    CHECK(row.find("8997") != std::string::npos);
    CHECK(std::count(row.begin(), row.end(), ',') == 11);
}

TEST_CASE("json report carries fixed keys and the undefined list") {
    const EvalReport r = metrics_from_cm(reference_cm());
    const auto j = nlohmann::json::parse(report_to_json(r, reference_cm()));
    for (const char* key :
         {"accuracy", "precision", "recall", "f1", "auc", "kappa", "mcc", "tp", "fp", "fn", "tn",
          "undefined"}) {
        CHECK(j.contains(key));
    }
    CHECK(j["tp"].get<std::int64_t>() == 8997);
    CHECK(j["accuracy"].get<double>() == doctest::Approx(0.999832));
    CHECK(j["undefined"].size() == 1);  // auc is not derivable from counts
    CHECK(j["undefined"][0].get<std::string>() == "auc");
}

TEST_CASE("confusion rendering labels both axes") {
    const std::string text = format_confusion(reference_cm());
    CHECK(text.find("Predicted: No Alarm") != std::string::npos);
    CHECK(text.find("Predicted: Alarm") != std::string::npos);
    CHECK(text.find("Actual: No Alarm") != std::string::npos);
    CHECK(text.find("Actual: Alarm") != std::string::npos);
    CHECK(text.find("8997") != std::string::npos);
    CHECK(text.find("8903") != std::string::npos);
}

}  // TEST_SUITE
