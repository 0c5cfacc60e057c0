#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "smokeml/classifier.hpp"
#include "smokeml/dataset.hpp"

namespace smokeml {

// 2x2 cross-tabulation of actual vs predicted labels; positive class is 1
// (fire alarm).
struct ConfusionMatrix {
    std::int64_t tp = 0;
    std::int64_t fp = 0;
    std::int64_t fn = 0;
    std::int64_t tn = 0;

    std::int64_t total() const { return tp + fp + fn + tn; }
    bool operator==(const ConfusionMatrix&) const = default;
};

ConfusionMatrix confusion(const std::vector<int>& labels, const std::vector<int>& predictions);

// The seven threshold/ranking metrics for one model run. A metric whose
// denominator is zero (or that was not computable from the inputs given)
// is reported as 0 and listed in `undefined`.
struct EvalReport {
    double accuracy = 0.0;
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
    double auc = 0.0;
    double kappa = 0.0;
    double mcc = 0.0;
    std::vector<std::string> undefined;

    bool is_undefined(const std::string& name) const;
};

// Confusion-derivable metrics; auc is flagged undefined because it needs
// ranked scores, not counts.
EvalReport metrics_from_cm(const ConfusionMatrix& cm);

// Mann-Whitney rank statistic: P(score_pos > score_neg) with ties counting
// one half. Requires both classes present.
double auc_roc(const std::vector<double>& scores, const std::vector<int>& labels);

struct EvaluationResult {
    EvalReport report;
    ConfusionMatrix cm;
    std::vector<double> scores;  // raw probabilities, one per test row
};

// Scores every test row, thresholds at 0.5, and assembles the confusion
// matrix plus all seven metrics.
EvaluationResult evaluate_model(const Classifier& model, const Dataset& test);

// Fixed-key JSON object (accuracy, precision, recall, f1, auc, kappa, mcc,
// tp, fp, fn, tn, undefined); numbers carry 6 decimal places.
std::string report_to_json(const EvalReport& report, const ConfusionMatrix& cm);

std::string report_csv_header();
std::string report_csv_row(const std::string& model_name, const EvalReport& report,
                           const ConfusionMatrix& cm);

// Text rendering with rows = actual, columns = predicted.
std::string format_confusion(const ConfusionMatrix& cm);

// 6-decimal fixed formatting used by every rendered report.
std::string format_metric(double value);

}  // namespace smokeml
