#include "smokeml/knn.hpp"

#include <string>

#include "smokeml/errors.hpp"
#include "smokeml/neighbors.hpp"

namespace smokeml {

KnnClassifier KnnClassifier::fit(const Dataset& train, const KnnConfig& cfg) {
    if (cfg.k < 1) {
        throw ArgumentError("knn: k must be >= 1");
    }
    if (static_cast<std::size_t>(cfg.k) > train.n_rows()) {
        throw ArgumentError("knn: k=" + std::to_string(cfg.k) + " exceeds the " +
                            std::to_string(train.n_rows()) + " training rows");
    }
    return KnnClassifier(train.features(), train.labels(), cfg.k);
}

double KnnClassifier::predict_proba(std::span<const double> x) const {
    check_dimension(x);
    const auto nearest = k_nearest(data_, x, static_cast<std::size_t>(k_));
    std::size_t positives = 0;
    for (const auto& [dist, row] : nearest) {
        if (labels_[row] == 1) ++positives;
    }
    return static_cast<double>(positives) / static_cast<double>(nearest.size());
}

}  // namespace smokeml
