#include "smokeml/naive_bayes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "smokeml/errors.hpp"

namespace smokeml {

GaussianNbClassifier GaussianNbClassifier::fit(const Dataset& train,
                                               const NaiveBayesConfig& cfg) {
    if (cfg.variance_smoothing < 0.0) {
        throw ArgumentError("variance_smoothing must be >= 0");
    }
    const std::size_t n = train.n_rows();
    const std::size_t d = train.n_features();
    const std::size_t n_pos = train.count_label(1);
    const std::size_t n_neg = n - n_pos;
    if (n_pos == 0 || n_neg == 0) {
        throw DataError("naive bayes needs both classes in the training set");
    }

    std::array<std::vector<double>, 2> means{std::vector<double>(d, 0.0),
                                             std::vector<double>(d, 0.0)};
    std::array<std::vector<double>, 2> variances{std::vector<double>(d, 0.0),
                                                 std::vector<double>(d, 0.0)};
    const std::array<double, 2> counts{static_cast<double>(n_neg), static_cast<double>(n_pos)};

    const Matrix& x = train.features();
    for (std::size_t i = 0; i < n; ++i) {
        const int c = train.labels()[i];
        const auto row = x.row(i);
        for (std::size_t f = 0; f < d; ++f) means[c][f] += row[f];
    }
    for (int c = 0; c < 2; ++c) {
        for (std::size_t f = 0; f < d; ++f) means[c][f] /= counts[c];
    }
    for (std::size_t i = 0; i < n; ++i) {
        const int c = train.labels()[i];
        const auto row = x.row(i);
        for (std::size_t f = 0; f < d; ++f) {
            const double delta = row[f] - means[c][f];
            variances[c][f] += delta * delta;
        }
    }
    for (int c = 0; c < 2; ++c) {
        for (std::size_t f = 0; f < d; ++f) variances[c][f] /= counts[c];
    }

    // Floor: smoothing × the largest pooled-data feature variance, so constant
    // columns cannot produce zero-variance likelihoods. If every feature is
    // constant the floor degenerates; fall back to the smoothing value itself.
    double max_pooled = 0.0;
    std::vector<double> pooled_mean(d, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const auto row = x.row(i);
        for (std::size_t f = 0; f < d; ++f) pooled_mean[f] += row[f];
    }
    for (std::size_t f = 0; f < d; ++f) pooled_mean[f] /= static_cast<double>(n);
    for (std::size_t f = 0; f < d; ++f) {
        double acc = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double delta = x(i, f) - pooled_mean[f];
            acc += delta * delta;
        }
        max_pooled = std::max(max_pooled, acc / static_cast<double>(n));
    }
    const double floor = std::max(
        max_pooled > 0.0 ? cfg.variance_smoothing * max_pooled : cfg.variance_smoothing, 1e-300);
    for (int c = 0; c < 2; ++c) {
        for (std::size_t f = 0; f < d; ++f) {
            variances[c][f] = std::max(variances[c][f], floor);
        }
    }

    const std::array<double, 2> priors{counts[0] / static_cast<double>(n),
                                       counts[1] / static_cast<double>(n)};
    return GaussianNbClassifier(std::move(means), std::move(variances), priors);
}

double GaussianNbClassifier::predict_proba(std::span<const double> x) const {
    check_dimension(x);
    std::array<double, 2> log_post{};
    for (int c = 0; c < 2; ++c) {
        double lp = std::log(priors_[c]);
        for (std::size_t f = 0; f < x.size(); ++f) {
            const double var = variances_[c][f];
            const double delta = x[f] - means_[c][f];
            lp -= 0.5 * (std::log(2.0 * std::numbers::pi * var) + delta * delta / var);
        }
        log_post[c] = lp;
    }
    // P(1|x) = 1 / (1 + exp(log_post0 - log_post1)), computed overflow-safe.
    return sigmoid(log_post[1] - log_post[0]);
}

}  // namespace smokeml
