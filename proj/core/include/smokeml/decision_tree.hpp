#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "smokeml/classifier.hpp"
#include "smokeml/dataset.hpp"
#include "smokeml/rng.hpp"

namespace smokeml {

// One node of a binary tree. Internal nodes route x[feature] < threshold to
// the left child. Leaf `value` is a class-1 fraction for CART/forest trees
// and an additive raw score for boosted trees.
struct TreeNode {
    int feature = -1;  // -1 marks a leaf
    double threshold = 0.0;
    int left = -1;
    int right = -1;
    double value = 0.0;

    bool is_leaf() const { return feature < 0; }
    bool operator==(const TreeNode&) const = default;
};

// Flat-array binary tree; node 0 is the root.
class Tree {
public:
    Tree() = default;
    explicit Tree(std::vector<TreeNode> nodes) : nodes_(std::move(nodes)) {}

    double evaluate(std::span<const double> x) const {
        int i = 0;
        while (!nodes_[i].is_leaf()) {
            i = x[nodes_[i].feature] < nodes_[i].threshold ? nodes_[i].left : nodes_[i].right;
        }
        return nodes_[i].value;
    }

    const std::vector<TreeNode>& nodes() const { return nodes_; }
    bool empty() const { return nodes_.empty(); }

private:
    std::vector<TreeNode> nodes_;
};

struct CartConfig {
    int max_depth = -1;  // -1 = unlimited
    int min_samples_split = 2;

    bool operator==(const CartConfig&) const = default;
};

// Options for the shared greedy Gini builder. Thresholds are midpoints of
// sorted unique feature values; every tie (equal impurity decrease) resolves
// to the lowest feature index, then the lowest threshold. An impure node is
// split as long as any candidate threshold exists, so depth-unlimited trees
// memorize any consistent training set.
struct GiniTreeOptions {
    int max_depth = -1;
    int min_samples_split = 2;
    // 0 = consider every feature; otherwise draw this many distinct features
    // per split from `rng`.
    int features_per_split = 0;
    Rng* rng = nullptr;
};

// Grows a classification tree on the rows listed in `rows` (a multiset, so
// bootstrap samples work). `weights` may be empty for unweighted data.
// Leaf values are (weighted) positive-class fractions.
Tree build_gini_tree(const Matrix& features, const std::vector<int>& labels,
                     const std::vector<double>& weights, std::vector<std::size_t> rows,
                     const GiniTreeOptions& options);

// Single CART decision tree classifier.
class CartClassifier final : public Classifier {
public:
    static CartClassifier fit(const Dataset& train, const CartConfig& cfg);

    CartClassifier(Tree tree, std::size_t n_features)
        : tree_(std::move(tree)), n_features_(n_features) {}

    double predict_proba(std::span<const double> x) const override {
        check_dimension(x);
        return tree_.evaluate(x);
    }
    std::size_t feature_count() const override { return n_features_; }
    std::string kind() const override { return "dt"; }

    const Tree& tree() const { return tree_; }

private:
    Tree tree_;
    std::size_t n_features_ = 0;
};

}  // namespace smokeml
