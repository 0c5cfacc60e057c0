#pragma once

#include <array>
#include <span>
#include <vector>

#include "smokeml/classifier.hpp"
#include "smokeml/dataset.hpp"

namespace smokeml {

struct NaiveBayesConfig {
    // Every per-feature variance is floored at
    // variance_smoothing × max(per-feature variance over the pooled data).
    double variance_smoothing = 1e-9;

    bool operator==(const NaiveBayesConfig&) const = default;
};

// Gaussian Naive Bayes: per-class priors and per-feature normal likelihoods,
// combined in log space so extreme inputs cannot overflow.
class GaussianNbClassifier final : public Classifier {
public:
    static GaussianNbClassifier fit(const Dataset& train, const NaiveBayesConfig& cfg);

    double predict_proba(std::span<const double> x) const override;
    std::size_t feature_count() const override { return means_[0].size(); }
    std::string kind() const override { return "nb"; }

    // Per-class parameters, indexed [class][feature]; class 0 first.
    const std::array<std::vector<double>, 2>& means() const { return means_; }
    const std::array<std::vector<double>, 2>& variances() const { return variances_; }
    const std::array<double, 2>& priors() const { return priors_; }

    GaussianNbClassifier(std::array<std::vector<double>, 2> means,
                         std::array<std::vector<double>, 2> variances,
                         std::array<double, 2> priors)
        : means_(std::move(means)), variances_(std::move(variances)), priors_(priors) {}

private:
    std::array<std::vector<double>, 2> means_;
    std::array<std::vector<double>, 2> variances_;
    std::array<double, 2> priors_{};
};

}  // namespace smokeml
