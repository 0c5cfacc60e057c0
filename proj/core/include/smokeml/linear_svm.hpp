#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "smokeml/classifier.hpp"
#include "smokeml/dataset.hpp"

namespace smokeml {

struct LinearSvmConfig {
    int epochs = 20;  // passes over the training set
    double regularization = 1e-4;
    std::uint64_t seed = 0;

    bool operator==(const LinearSvmConfig&) const = default;
};

// Linear SVM trained with the Pegasos stochastic subgradient method
// (step 1/(regularization·t)). The bias rides along as a regularized
// constant-1 feature, which keeps the first steps bounded. predict_proba is
// sigmoid(w·x + b): uncalibrated, but monotone in the margin so ranking and
// the 0.5 threshold (= margin 0) behave.
class LinearSvmClassifier final : public Classifier {
public:
    static LinearSvmClassifier fit(const Dataset& train, const LinearSvmConfig& cfg);

    double predict_proba(std::span<const double> x) const override;
    std::size_t feature_count() const override { return weights_.size(); }
    std::string kind() const override { return "svm"; }

    double score(std::span<const double> x) const;

    const std::vector<double>& weights() const { return weights_; }
    double bias() const { return bias_; }

    LinearSvmClassifier(std::vector<double> weights, double bias)
        : weights_(std::move(weights)), bias_(bias) {}

private:
    std::vector<double> weights_;
    double bias_ = 0.0;
};

}  // namespace smokeml
