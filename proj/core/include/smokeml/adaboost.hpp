#pragma once

#include <span>
#include <vector>

#include "smokeml/dataset.hpp"
#include "smokeml/decision_tree.hpp"

namespace smokeml {

struct AdaBoostConfig {
    int n_rounds = 50;

    bool operator==(const AdaBoostConfig&) const = default;
};

// Discrete AdaBoost over depth-1 Gini stumps. Round weights follow
// alpha = 0.5·ln((1-eps)/eps); a perfect stump (eps = 0) is kept with eps
// clamped to 1e-12 and training stops, and eps >= 0.5 stops without adding.
// predict_proba = sigmoid(2·sum(alpha_t·h_t(x))) with h in {-1,+1}.
class AdaBoostClassifier final : public Classifier {
public:
    static AdaBoostClassifier fit(const Dataset& train, const AdaBoostConfig& cfg);

    double predict_proba(std::span<const double> x) const override;
    std::size_t feature_count() const override { return n_features_; }
    std::string kind() const override { return "adaboost"; }

    static double alpha_from_error(double eps);

    const std::vector<Tree>& stumps() const { return stumps_; }
    const std::vector<double>& alphas() const { return alphas_; }

    AdaBoostClassifier(std::vector<Tree> stumps, std::vector<double> alphas,
                       std::size_t n_features)
        : stumps_(std::move(stumps)), alphas_(std::move(alphas)), n_features_(n_features) {}

private:
    std::vector<Tree> stumps_;
    std::vector<double> alphas_;
    std::size_t n_features_ = 0;
};

}  // namespace smokeml
