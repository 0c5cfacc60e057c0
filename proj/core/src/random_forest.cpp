#include "smokeml/random_forest.hpp"

#include <cmath>

#include "smokeml/errors.hpp"
#include "smokeml/parallel.hpp"
#include "smokeml/rng.hpp"

namespace smokeml {

RandomForestClassifier RandomForestClassifier::fit(const Dataset& train,
                                                   const RandomForestConfig& cfg) {
    if (cfg.n_trees < 1) {
        throw ArgumentError("random forest: n_trees must be >= 1");
    }
    if (train.n_rows() == 0) {
        throw DataError("cannot fit a random forest on an empty dataset");
    }
    const std::size_t n = train.n_rows();
    const std::size_t d = train.n_features();
    const int per_split =
        cfg.feature_subsample ? static_cast<int>(std::ceil(std::sqrt(static_cast<double>(d)))) : 0;

    std::vector<Tree> trees(static_cast<std::size_t>(cfg.n_trees));
    parallel_for(trees.size(), [&](std::size_t t) {
        Rng rng(cfg.seed + t);
        std::vector<std::size_t> rows(n);
        if (cfg.bootstrap) {
            for (std::size_t i = 0; i < n; ++i) rows[i] = rng.below(n);
        } else {
            for (std::size_t i = 0; i < n; ++i) rows[i] = i;
        }
        GiniTreeOptions options;
        options.max_depth = cfg.max_depth;
        options.min_samples_split = cfg.min_samples_split;
        options.features_per_split = per_split;
        options.rng = &rng;
        trees[t] = build_gini_tree(train.features(), train.labels(), {}, std::move(rows), options);
    });
    return RandomForestClassifier(std::move(trees), d);
}

double RandomForestClassifier::predict_proba(std::span<const double> x) const {
    check_dimension(x);
    double total = 0.0;
    for (const Tree& tree : trees_) total += tree.evaluate(x);
    return total / static_cast<double>(trees_.size());
}

}  // namespace smokeml
