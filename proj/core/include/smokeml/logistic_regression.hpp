#pragma once

#include <span>
#include <vector>

#include "smokeml/classifier.hpp"
#include "smokeml/dataset.hpp"

namespace smokeml {

struct LogisticRegressionConfig {
    double learning_rate = 0.1;
    int epochs = 500;
    double l2 = 0.0;

    bool operator==(const LogisticRegressionConfig&) const = default;
};

// Binary logistic regression trained by full-batch gradient descent on the
// average log-loss plus (l2/2)·||w||² (bias unregularized).
class LogisticRegressionClassifier final : public Classifier {
public:
    static LogisticRegressionClassifier fit(const Dataset& train,
                                            const LogisticRegressionConfig& cfg);

    LogisticRegressionClassifier(std::vector<double> weights, double bias)
        : weights_(std::move(weights)), bias_(bias) {}

    double predict_proba(std::span<const double> x) const override;
    std::size_t feature_count() const override { return weights_.size(); }
    std::string kind() const override { return "lr"; }

    const std::vector<double>& weights() const { return weights_; }
    double bias() const { return bias_; }

    // Objective and its analytic gradient, exposed so tests can check the
    // gradient against central finite differences.
    static double loss(const Matrix& x, const std::vector<int>& y,
                       std::span<const double> weights, double bias, double l2);
    static void loss_gradient(const Matrix& x, const std::vector<int>& y,
                              std::span<const double> weights, double bias, double l2,
                              std::vector<double>& grad_w, double& grad_b);

private:
    std::vector<double> weights_;
    double bias_ = 0.0;
};

}  // namespace smokeml
