#include "smokeml/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>

#include "smokeml/errors.hpp"

namespace smokeml {

ConfusionMatrix confusion(const std::vector<int>& labels, const std::vector<int>& predictions) {
    if (labels.size() != predictions.size()) {
        throw ArgumentError("labels and predictions differ in length");
    }
    if (labels.empty()) {
        throw ArgumentError("confusion needs at least one pair");
    }
    ConfusionMatrix cm;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] == 1) {
            predictions[i] == 1 ? ++cm.tp : ++cm.fn;
        } else {
            predictions[i] == 1 ? ++cm.fp : ++cm.tn;
        }
    }
    return cm;
}

bool EvalReport::is_undefined(const std::string& name) const {
    return std::find(undefined.begin(), undefined.end(), name) != undefined.end();
}

EvalReport metrics_from_cm(const ConfusionMatrix& cm) {
    if (cm.tp < 0 || cm.fp < 0 || cm.fn < 0 || cm.tn < 0) {
        throw ArgumentError("confusion counts must be non-negative");
    }
    const double total = static_cast<double>(cm.total());
    if (total < 1.0) {
        throw ArgumentError("confusion matrix is empty");
    }

    EvalReport r;
    const auto ratio = [&r](double num, double den, const char* name) {
        if (den == 0.0) {
            r.undefined.push_back(name);
            return 0.0;
        }
        return num / den;
    };

    // Proportions keep kappa/mcc exactly scale-invariant and overflow-free.
    const double tp = cm.tp / total, fp = cm.fp / total;
    const double fn = cm.fn / total, tn = cm.tn / total;

    r.accuracy = tp + tn;
    r.precision = ratio(tp, tp + fp, "precision");
    r.recall = ratio(tp, tp + fn, "recall");
    r.f1 = ratio(2.0 * r.precision * r.recall, r.precision + r.recall, "f1");

    const double p_yes = (tp + fp) * (tp + fn);
    const double p_no = (tn + fn) * (tn + fp);
    const double p_e = p_yes + p_no;
    r.kappa = ratio(r.accuracy - p_e, 1.0 - p_e, "kappa");

    const double mcc_den = std::sqrt((tp + fp) * (tp + fn) * (tn + fp) * (tn + fn));
    r.mcc = ratio(tp * tn - fp * fn, mcc_den, "mcc");

    r.auc = 0.0;
    r.undefined.push_back("auc");
    return r;
}

double auc_roc(const std::vector<double>& scores, const std::vector<int>& labels) {
    if (scores.size() != labels.size()) {
        throw ArgumentError("scores and labels differ in length");
    }
    const std::size_t n = scores.size();
    std::size_t n_pos = 0;
    for (const int y : labels) n_pos += (y == 1);
    const std::size_t n_neg = n - n_pos;
    if (n_pos == 0 || n_neg == 0) {
        throw ArgumentError("auc needs at least one positive and one negative label");
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });

    // Sum of positive ranks with tied scores sharing their average rank.
    double pos_rank_sum = 0.0;
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j < n && scores[order[j]] == scores[order[i]]) ++j;
        const double avg_rank = 0.5 * static_cast<double>(i + 1 + j);  // 1-based
        for (std::size_t k = i; k < j; ++k) {
            if (labels[order[k]] == 1) pos_rank_sum += avg_rank;
        }
        i = j;
    }
    const double u = pos_rank_sum - 0.5 * static_cast<double>(n_pos) * (n_pos + 1);
    return u / (static_cast<double>(n_pos) * static_cast<double>(n_neg));
}

EvaluationResult evaluate_model(const Classifier& model, const Dataset& test) {
    if (test.n_rows() == 0) {
        throw DataError("cannot evaluate on an empty test set");
    }
    EvaluationResult result;
    result.scores = model.predict_proba_rows(test.features());
    std::vector<int> predicted(result.scores.size());
    for (std::size_t i = 0; i < result.scores.size(); ++i) {
        predicted[i] = result.scores[i] >= 0.5 ? 1 : 0;
    }
    result.cm = confusion(test.labels(), predicted);
    result.report = metrics_from_cm(result.cm);
    result.report.auc = auc_roc(result.scores, test.labels());
    std::erase(result.report.undefined, "auc");
    return result;
}

std::string format_metric(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", value);
    return buf;
}

std::string report_to_json(const EvalReport& report, const ConfusionMatrix& cm) {
    std::ostringstream out;
    out << "{";
    const auto metric = [&](const char* name, double v, bool first = false) {
        if (!first) out << ", ";
        out << '"' << name << "\": " << format_metric(v);
    };
    metric("accuracy", report.accuracy, true);
    metric("precision", report.precision);
    metric("recall", report.recall);
    metric("f1", report.f1);
    metric("auc", report.auc);
    metric("kappa", report.kappa);
    metric("mcc", report.mcc);
    out << ", \"tp\": " << cm.tp << ", \"fp\": " << cm.fp << ", \"fn\": " << cm.fn
        << ", \"tn\": " << cm.tn;
    out << ", \"undefined\": [";
    for (std::size_t i = 0; i < report.undefined.size(); ++i) {
        out << (i ? ", " : "") << '"' << report.undefined[i] << '"';
    }
    out << "]}";
    return out.str();
}

std::string report_csv_header() {
    return "model,accuracy,precision,recall,f1,auc,kappa,mcc,tp,fp,fn,tn";
}

std::string report_csv_row(const std::string& model_name, const EvalReport& report,
                           const ConfusionMatrix& cm) {
    std::ostringstream out;
    out << model_name << ',' << format_metric(report.accuracy) << ','
        << format_metric(report.precision) << ',' << format_metric(report.recall) << ','
        << format_metric(report.f1) << ',' << format_metric(report.auc) << ','
        << format_metric(report.kappa) << ',' << format_metric(report.mcc) << ',' << cm.tp
        << ',' << cm.fp << ',' << cm.fn << ',' << cm.tn;
    return out.str();
}

std::string format_confusion(const ConfusionMatrix& cm) {
    std::ostringstream out;
    const auto cell = [](std::int64_t v) {
        std::string s = std::to_string(v);
        return std::string(12 - std::min<std::size_t>(12, s.size()), ' ') + s;
    };
    out << "                  Predicted: No Alarm  Predicted: Alarm\n";
    out << "Actual: No Alarm  " << cell(cm.tn) << "       " << cell(cm.fp) << '\n';
    out << "Actual: Alarm     " << cell(cm.fn) << "       " << cell(cm.tp) << '\n';
    return out.str();
}

}  // namespace smokeml
