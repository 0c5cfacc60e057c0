#pragma once

#include <span>
#include <vector>

#include "smokeml/classifier.hpp"
#include "smokeml/dataset.hpp"
#include "smokeml/decision_tree.hpp"

namespace smokeml {

struct GbtConfig {
    int n_rounds = 100;
    int max_depth = 6;  // -1 = unlimited
    double learning_rate = 0.3;
    double l2 = 1.0;             // lambda in leaf weights and split gains
    double min_split_gain = 0.0;  // gamma subtracted from every split gain

    bool operator==(const GbtConfig&) const = default;
};

// Optimal leaf weight -G/(H+l2) for summed gradients G and hessians H.
double gbt_leaf_weight(double g_sum, double h_sum, double l2);

// Gain of splitting a node into (left, right); positive means the split
// lowers the regularized second-order objective by more than min_split_gain.
double gbt_split_gain(double g_left, double h_left, double g_right, double h_right,
                      double l2, double min_split_gain);

struct GbtTreeOptions {
    int max_depth = 6;  // -1 = unlimited
    double l2 = 1.0;
    double min_split_gain = 0.0;
};

// One regression tree on per-row (gradient, hessian) pairs; leaves hold the
// unscaled weights -G/(H+l2). Splits use exact greedy search over midpoints of
// sorted unique values, ties to the lowest feature then lowest threshold, and
// are accepted only when the gain is strictly positive.
Tree build_gbt_tree(const Matrix& features, const std::vector<double>& gradients,
                    const std::vector<double>& hessians, const GbtTreeOptions& options);

// Second-order gradient-boosted trees on logistic loss. The raw score starts
// at the base-rate log-odds and each round adds learning_rate times a new
// tree (the scale is folded into the stored leaves).
class GbtClassifier final : public Classifier {
public:
    static GbtClassifier fit(const Dataset& train, const GbtConfig& cfg);

    double predict_proba(std::span<const double> x) const override;
    std::size_t feature_count() const override { return n_features_; }
    std::string kind() const override { return "gbt"; }

    double raw_score(std::span<const double> x) const;

    double base_score() const { return base_score_; }
    const std::vector<Tree>& trees() const { return trees_; }
    // Average training log-loss measured after each boosting round.
    const std::vector<double>& training_loss() const { return training_loss_; }

    GbtClassifier(double base_score, std::vector<Tree> trees, std::size_t n_features,
                  std::vector<double> training_loss = {})
        : base_score_(base_score),
          trees_(std::move(trees)),
          n_features_(n_features),
          training_loss_(std::move(training_loss)) {}

private:
    double base_score_ = 0.0;
    std::vector<Tree> trees_;
    std::size_t n_features_ = 0;
    std::vector<double> training_loss_;
};

}  // namespace smokeml
