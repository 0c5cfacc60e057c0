#include "smokeml/gbt.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>

#include "smokeml/errors.hpp"

namespace smokeml {

double gbt_leaf_weight(double g_sum, double h_sum, double l2) {
    return -g_sum / (h_sum + l2);
}

double gbt_split_gain(double g_left, double h_left, double g_right, double h_right, double l2,
                      double min_split_gain) {
    const double g = g_left + g_right;
    const double h = h_left + h_right;
    return 0.5 * (g_left * g_left / (h_left + l2) + g_right * g_right / (h_right + l2) -
                  g * g / (h + l2)) -
           min_split_gain;
}

namespace {

// Grows regression trees level by level over feature orders presorted once,
// so repeated rounds share the O(d·n·log n) sort.
class GbtTreeBuilder {
public:
    GbtTreeBuilder(const Matrix& x, const GbtTreeOptions& options) : x_(x), opt_(options) {
        const std::size_t n = x_.rows();
        const std::size_t d = x_.cols();
        order_.resize(d, std::vector<std::uint32_t>(n));
        for (std::size_t f = 0; f < d; ++f) {
            auto& ord = order_[f];
            std::iota(ord.begin(), ord.end(), 0u);
            std::sort(ord.begin(), ord.end(), [&](std::uint32_t a, std::uint32_t b) {
                const double va = x_(a, f), vb = x_(b, f);
                return va != vb ? va < vb : a < b;
            });
        }
    }

    Tree build(std::span<const double> g, std::span<const double> h) {
        const std::size_t n = x_.rows();
        const std::size_t d = x_.cols();

        std::vector<TreeNode> nodes(1);
        node_of_row_.assign(n, 0);

        struct Active {
            int id;
            double g_sum;
            double h_sum;
        };
        std::vector<Active> active{
            {0, std::accumulate(g.begin(), g.end(), 0.0), std::accumulate(h.begin(), h.end(), 0.0)}};

        struct Best {
            double gain = 0.0;  // must be strictly beaten, so zero-gain splits are rejected
            int feature = -1;
            double threshold = 0.0;
        };
        struct Scan {
            double g_left;
            double h_left;
            double last_value;
            bool seen;
        };
        std::vector<int> slot_of_node;
        std::vector<Best> best;
        std::vector<Scan> scan;

        for (int depth = 0; !active.empty(); ++depth) {
            if (opt_.max_depth >= 0 && depth >= opt_.max_depth) {
                for (const Active& a : active) {
                    nodes[a.id].value = gbt_leaf_weight(a.g_sum, a.h_sum, opt_.l2);
                }
                break;
            }

            slot_of_node.assign(nodes.size(), -1);
            for (std::size_t s = 0; s < active.size(); ++s) slot_of_node[active[s].id] = static_cast<int>(s);
            best.assign(active.size(), Best{});

            for (std::size_t f = 0; f < d; ++f) {
                scan.assign(active.size(), Scan{0.0, 0.0, 0.0, false});
                for (const std::uint32_t row : order_[f]) {
                    const int slot = slot_of_node[node_of_row_[row]];
                    if (slot < 0) continue;
                    Scan& s = scan[static_cast<std::size_t>(slot)];
                    const double v = x_(row, f);
                    if (s.seen && v > s.last_value) {
                        const Active& a = active[static_cast<std::size_t>(slot)];
                        const double gain = gbt_split_gain(s.g_left, s.h_left, a.g_sum - s.g_left,
                                                           a.h_sum - s.h_left, opt_.l2,
                                                           opt_.min_split_gain);
                        Best& b = best[static_cast<std::size_t>(slot)];
                        if (gain > b.gain) {
                            b.gain = gain;
                            b.feature = static_cast<int>(f);
                            b.threshold = 0.5 * (s.last_value + v);
                        }
                    }
                    s.g_left += g[row];
                    s.h_left += h[row];
                    s.last_value = v;
                    s.seen = true;
                }
            }

            std::vector<Active> next;
            for (std::size_t s = 0; s < active.size(); ++s) {
                const Active& a = active[s];
                if (best[s].feature < 0) {
                    nodes[a.id].value = gbt_leaf_weight(a.g_sum, a.h_sum, opt_.l2);
                    continue;
                }
                const int left = static_cast<int>(nodes.size());
                nodes[a.id].feature = best[s].feature;
                nodes[a.id].threshold = best[s].threshold;
                nodes[a.id].left = left;
                nodes[a.id].right = left + 1;
                nodes.emplace_back();
                nodes.emplace_back();
                next.push_back({left, 0.0, 0.0});
                next.push_back({left + 1, 0.0, 0.0});
            }

            // Route rows of split nodes to their children and collect child sums.
            std::vector<int> next_slot(nodes.size(), -1);
            for (std::size_t s = 0; s < next.size(); ++s) next_slot[next[s].id] = static_cast<int>(s);
            for (std::size_t row = 0; row < n; ++row) {
                const int nid = node_of_row_[row];
                const int slot = nid < static_cast<int>(slot_of_node.size()) ? slot_of_node[nid] : -1;
                if (slot < 0 || nodes[nid].is_leaf()) continue;
                const TreeNode& parent = nodes[nid];
                const int child =
                    x_(row, parent.feature) < parent.threshold ? parent.left : parent.right;
                node_of_row_[row] = child;
                Active& c = next[static_cast<std::size_t>(next_slot[child])];
                c.g_sum += g[row];
                c.h_sum += h[row];
            }
            active = std::move(next);
        }
        return Tree(std::move(nodes));
    }

private:
    const Matrix& x_;
    GbtTreeOptions opt_;
    std::vector<std::vector<std::uint32_t>> order_;
    std::vector<int> node_of_row_;
};

double mean_log_loss(std::span<const double> scores, const std::vector<int>& y) {
    double total = 0.0;
    for (std::size_t i = 0; i < scores.size(); ++i) {
        const double p = std::clamp(sigmoid(scores[i]), 1e-15, 1.0 - 1e-15);
        total += y[i] == 1 ? -std::log(p) : -std::log(1.0 - p);
    }
    return total / static_cast<double>(scores.size());
}

}  // namespace

Tree build_gbt_tree(const Matrix& features, const std::vector<double>& gradients,
                    const std::vector<double>& hessians, const GbtTreeOptions& options) {
    if (features.rows() == 0) {
        throw ArgumentError("cannot grow a tree on zero rows");
    }
    if (gradients.size() != features.rows() || hessians.size() != features.rows()) {
        throw DimensionError("gradients/hessians must have one entry per row");
    }
    GbtTreeBuilder builder(features, options);
    return builder.build(gradients, hessians);
}

GbtClassifier GbtClassifier::fit(const Dataset& train, const GbtConfig& cfg) {
    if (cfg.n_rounds < 1) {
        throw ArgumentError("gbt: n_rounds must be >= 1");
    }
    if (cfg.learning_rate <= 0.0) {
        throw ArgumentError("gbt: learning_rate must be > 0");
    }
    if (cfg.l2 < 0.0 || cfg.min_split_gain < 0.0) {
        throw ArgumentError("gbt: l2 and min_split_gain must be >= 0");
    }
    if (train.n_rows() == 0) {
        throw DataError("cannot fit gbt on an empty dataset");
    }

    const std::size_t n = train.n_rows();
    const std::vector<int>& y = train.labels();
    const double base_rate = std::clamp(
        static_cast<double>(train.count_label(1)) / static_cast<double>(n), 1e-15, 1.0 - 1e-15);
    const double base_score = std::log(base_rate / (1.0 - base_rate));

    GbtTreeOptions tree_options{cfg.max_depth, cfg.l2, cfg.min_split_gain};
    GbtTreeBuilder builder(train.features(), tree_options);

    std::vector<double> scores(n, base_score);
    std::vector<double> gradients(n), hessians(n);
    std::vector<Tree> trees;
    std::vector<double> losses;
    trees.reserve(static_cast<std::size_t>(cfg.n_rounds));
    for (int round = 0; round < cfg.n_rounds; ++round) {
        for (std::size_t i = 0; i < n; ++i) {
            const double p = sigmoid(scores[i]);
            gradients[i] = p - static_cast<double>(y[i]);
            hessians[i] = p * (1.0 - p);
        }
        Tree tree = builder.build(gradients, hessians);

        // Fold the learning rate into the stored leaves so prediction and
        // serialization see plain additive trees.
        std::vector<TreeNode> scaled = tree.nodes();
        for (TreeNode& node : scaled) {
            if (node.is_leaf()) node.value *= cfg.learning_rate;
        }
        Tree scaled_tree(std::move(scaled));
        for (std::size_t i = 0; i < n; ++i) {
            scores[i] += scaled_tree.evaluate(train.features().row(i));
        }
        losses.push_back(mean_log_loss(scores, y));
        trees.push_back(std::move(scaled_tree));
    }
    return GbtClassifier(base_score, std::move(trees), train.n_features(), std::move(losses));
}

double GbtClassifier::raw_score(std::span<const double> x) const {
    double score = base_score_;
    for (const Tree& tree : trees_) score += tree.evaluate(x);
    return score;
}

double GbtClassifier::predict_proba(std::span<const double> x) const {
    check_dimension(x);
    return sigmoid(raw_score(x));
}

}  // namespace smokeml
