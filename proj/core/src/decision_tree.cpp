#include "smokeml/decision_tree.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "smokeml/errors.hpp"

namespace smokeml {

namespace {

struct ScanItem {
    double value;
    std::uint32_t row;

    bool operator<(const ScanItem& other) const {
        return value != other.value ? value < other.value : row < other.row;
    }
};

struct BestSplit {
    bool found = false;
    int feature = -1;
    double threshold = 0.0;
    double decrease = 0.0;
};

double gini(double w_pos, double w_total) {
    if (w_total <= 0.0) return 0.0;
    const double p = w_pos / w_total;
    return 1.0 - p * p - (1.0 - p) * (1.0 - p);
}

class GiniTreeBuilder {
public:
    GiniTreeBuilder(const Matrix& features, const std::vector<int>& labels,
                    const std::vector<double>& weights, std::vector<std::size_t> rows,
                    const GiniTreeOptions& options)
        : x_(features), y_(labels), w_(weights), rows_(std::move(rows)), opt_(options) {}

    Tree build() {
        nodes_.clear();
        grow(0, rows_.size(), 0);
        return Tree(std::move(nodes_));
    }

private:
    double weight(std::size_t row) const { return w_.empty() ? 1.0 : w_[row]; }

    std::vector<std::size_t> candidate_features() const {
        const std::size_t d = x_.cols();
        if (opt_.features_per_split <= 0 ||
            static_cast<std::size_t>(opt_.features_per_split) >= d || opt_.rng == nullptr) {
            std::vector<std::size_t> all(d);
            for (std::size_t i = 0; i < d; ++i) all[i] = i;
            return all;
        }
        auto picked = opt_.rng->sample_without_replacement(
            d, static_cast<std::size_t>(opt_.features_per_split));
        std::sort(picked.begin(), picked.end());  // ties resolve to the lowest feature
        return picked;
    }

    // Best threshold for one feature over rows [begin, end); thresholds are
    // midpoints between consecutive distinct values.
    void scan_feature(std::size_t feature, std::size_t begin, std::size_t end, double w_total,
                      double w_pos_total, BestSplit& best) const {
        scratch_.clear();
        for (std::size_t i = begin; i < end; ++i) {
            const std::size_t r = rows_[i];
            scratch_.push_back({x_(r, feature), static_cast<std::uint32_t>(r)});
        }
        std::sort(scratch_.begin(), scratch_.end());

        const double parent = gini(w_pos_total, w_total);
        double w_left = 0.0, w_pos_left = 0.0;
        for (std::size_t i = 0; i < scratch_.size(); ++i) {
            if (i > 0 && scratch_[i].value > scratch_[i - 1].value) {
                const double w_right = w_total - w_left;
                const double decrease = parent -
                                        (w_left / w_total) * gini(w_pos_left, w_left) -
                                        (w_right / w_total) * gini(w_pos_total - w_pos_left, w_right);
                if (!best.found || decrease > best.decrease) {
                    best.found = true;
                    best.feature = static_cast<int>(feature);
                    best.threshold = 0.5 * (scratch_[i - 1].value + scratch_[i].value);
                    best.decrease = decrease;
                }
            }
            const std::size_t r = scratch_[i].row;
            const double w = weight(r);
            w_left += w;
            if (y_[r] == 1) w_pos_left += w;
        }
    }

    int grow(std::size_t begin, std::size_t end, int depth) {
        const int id = static_cast<int>(nodes_.size());
        nodes_.push_back(TreeNode{});

        double w_total = 0.0, w_pos = 0.0;
        for (std::size_t i = begin; i < end; ++i) {
            const double w = weight(rows_[i]);
            w_total += w;
            if (y_[rows_[i]] == 1) w_pos += w;
        }
        assert(w_total > 0.0);
        nodes_[id].value = w_pos / w_total;

        const std::size_t count = end - begin;
        const bool pure = (w_pos == 0.0 || w_pos == w_total);
        const bool depth_capped = opt_.max_depth >= 0 && depth >= opt_.max_depth;
        if (pure || depth_capped || count < static_cast<std::size_t>(opt_.min_samples_split)) {
            return id;
        }

        BestSplit best;
        for (const std::size_t f : candidate_features()) {
            scan_feature(f, begin, end, w_total, w_pos, best);
        }
        if (!best.found) {
            return id;  // all candidate features constant in this node
        }

        const auto mid_it = std::stable_partition(
            rows_.begin() + static_cast<std::ptrdiff_t>(begin),
            rows_.begin() + static_cast<std::ptrdiff_t>(end),
            [&](std::size_t r) { return x_(r, best.feature) < best.threshold; });
        const std::size_t mid = static_cast<std::size_t>(mid_it - rows_.begin());
        assert(mid > begin && mid < end);

        nodes_[id].feature = best.feature;
        nodes_[id].threshold = best.threshold;
        const int left = grow(begin, mid, depth + 1);
        const int right = grow(mid, end, depth + 1);
        nodes_[id].left = left;
        nodes_[id].right = right;
        return id;
    }

    const Matrix& x_;
    const std::vector<int>& y_;
    const std::vector<double>& w_;
    std::vector<std::size_t> rows_;
    const GiniTreeOptions& opt_;
    std::vector<TreeNode> nodes_;
    mutable std::vector<ScanItem> scratch_;
};

}  // namespace

Tree build_gini_tree(const Matrix& features, const std::vector<int>& labels,
                     const std::vector<double>& weights, std::vector<std::size_t> rows,
                     const GiniTreeOptions& options) {
    if (rows.empty()) {
        throw ArgumentError("cannot grow a tree on zero rows");
    }
    GiniTreeBuilder builder(features, labels, weights, std::move(rows), options);
    return builder.build();
}

CartClassifier CartClassifier::fit(const Dataset& train, const CartConfig& cfg) {
    if (train.n_rows() == 0) {
        throw DataError("cannot fit a tree on an empty dataset");
    }
    if (cfg.min_samples_split < 2) {
        throw ArgumentError("min_samples_split must be >= 2");
    }
    std::vector<std::size_t> rows(train.n_rows());
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
    GiniTreeOptions options;
    options.max_depth = cfg.max_depth;
    options.min_samples_split = cfg.min_samples_split;
    Tree tree = build_gini_tree(train.features(), train.labels(), {}, std::move(rows), options);
    return CartClassifier(std::move(tree), train.n_features());
}

}  // namespace smokeml
