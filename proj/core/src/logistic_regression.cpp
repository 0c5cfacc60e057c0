#include "smokeml/logistic_regression.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "smokeml/errors.hpp"

namespace smokeml {

namespace {

double row_score(std::span<const double> row, std::span<const double> weights, double bias) {
    double z = bias;
    for (std::size_t f = 0; f < weights.size(); ++f) z += weights[f] * row[f];
    return z;
}

}  // namespace

double LogisticRegressionClassifier::predict_proba(std::span<const double> x) const {
    check_dimension(x);
    return sigmoid(row_score(x, weights_, bias_));
}

double LogisticRegressionClassifier::loss(const Matrix& x, const std::vector<int>& y,
                                          std::span<const double> weights, double bias,
                                          double l2) {
    const std::size_t n = x.rows();
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double p = std::clamp(sigmoid(row_score(x.row(i), weights, bias)), 1e-15, 1.0 - 1e-15);
        total += y[i] == 1 ? -std::log(p) : -std::log(1.0 - p);
    }
    double penalty = 0.0;
    for (const double w : weights) penalty += w * w;
    return total / static_cast<double>(n) + 0.5 * l2 * penalty;
}

void LogisticRegressionClassifier::loss_gradient(const Matrix& x, const std::vector<int>& y,
                                                 std::span<const double> weights, double bias,
                                                 double l2, std::vector<double>& grad_w,
                                                 double& grad_b) {
    const std::size_t n = x.rows();
    grad_w.assign(weights.size(), 0.0);
    grad_b = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const auto row = x.row(i);
        const double err = sigmoid(row_score(row, weights, bias)) - static_cast<double>(y[i]);
        for (std::size_t f = 0; f < weights.size(); ++f) grad_w[f] += err * row[f];
        grad_b += err;
    }
    const double inv_n = 1.0 / static_cast<double>(n);
    for (std::size_t f = 0; f < weights.size(); ++f) {
        grad_w[f] = grad_w[f] * inv_n + l2 * weights[f];
    }
    grad_b *= inv_n;
}

LogisticRegressionClassifier LogisticRegressionClassifier::fit(
    const Dataset& train, const LogisticRegressionConfig& cfg) {
    if (train.n_rows() == 0) {
        throw DataError("cannot fit logistic regression on an empty dataset");
    }
    if (cfg.learning_rate <= 0.0) {
        throw ArgumentError("learning_rate must be > 0");
    }
    if (cfg.epochs < 0) {
        throw ArgumentError("epochs must be >= 0");
    }
    if (cfg.l2 < 0.0) {
        throw ArgumentError("l2 must be >= 0");
    }

    std::vector<double> weights(train.n_features(), 0.0);
    double bias = 0.0;
    std::vector<double> grad_w;
    double grad_b = 0.0;
    for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
        loss_gradient(train.features(), train.labels(), weights, bias, cfg.l2, grad_w, grad_b);
        for (std::size_t f = 0; f < weights.size(); ++f) {
            weights[f] -= cfg.learning_rate * grad_w[f];
        }
        bias -= cfg.learning_rate * grad_b;
        const double current = loss(train.features(), train.labels(), weights, bias, cfg.l2);
        if (!std::isfinite(current)) {
            throw TrainingError("logistic regression diverged at epoch " +
                                std::to_string(epoch + 1) + ": loss is not finite");
        }
    }
    return LogisticRegressionClassifier(std::move(weights), bias);
}

}  // namespace smokeml
