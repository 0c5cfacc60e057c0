#pragma once

#include <span>
#include <vector>

#include "smokeml/classifier.hpp"
#include "smokeml/dataset.hpp"

namespace smokeml {

struct KnnConfig {
    int k = 5;

    bool operator==(const KnnConfig&) const = default;
};

// Brute-force k-nearest-neighbors vote: predict_proba(x) is the fraction of
// the k Euclidean-nearest training rows labeled 1, distance ties broken by
// the lower row index.
class KnnClassifier final : public Classifier {
public:
    static KnnClassifier fit(const Dataset& train, const KnnConfig& cfg);

    double predict_proba(std::span<const double> x) const override;
    std::size_t feature_count() const override { return data_.cols(); }
    std::string kind() const override { return "knn"; }

    int k() const { return k_; }
    const Matrix& data() const { return data_; }
    const std::vector<int>& labels() const { return labels_; }

    KnnClassifier(Matrix data, std::vector<int> labels, int k)
        : data_(std::move(data)), labels_(std::move(labels)), k_(k) {}

private:
    Matrix data_;
    std::vector<int> labels_;
    int k_ = 5;
};

}  // namespace smokeml
