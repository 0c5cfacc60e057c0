#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "smokeml/dataset.hpp"
#include "smokeml/decision_tree.hpp"

namespace smokeml {

struct RandomForestConfig {
    int n_trees = 100;
    int max_depth = -1;  // -1 = unlimited
    int min_samples_split = 2;
    // When true, each split draws ceil(sqrt(n_features)) candidate features.
    bool feature_subsample = true;
    // Test hook: false trains every tree on the original rows.
    bool bootstrap = true;
    std::uint64_t seed = 0;

    bool operator==(const RandomForestConfig&) const = default;
};

// Bagged Gini trees; tree t is grown from Rng(seed + t), so the forest is
// identical whether trees are built sequentially or in parallel.
class RandomForestClassifier final : public Classifier {
public:
    static RandomForestClassifier fit(const Dataset& train, const RandomForestConfig& cfg);

    double predict_proba(std::span<const double> x) const override;
    std::size_t feature_count() const override { return n_features_; }
    std::string kind() const override { return "rf"; }

    const std::vector<Tree>& trees() const { return trees_; }

    RandomForestClassifier(std::vector<Tree> trees, std::size_t n_features)
        : trees_(std::move(trees)), n_features_(n_features) {}

private:
    std::vector<Tree> trees_;
    std::size_t n_features_ = 0;
};

}  // namespace smokeml
