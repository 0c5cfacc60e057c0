#pragma once

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "smokeml/errors.hpp"
#include "smokeml/matrix.hpp"

namespace smokeml {

// Overflow-safe logistic function, used by every margin-based model.
inline double sigmoid(double z) {
    if (z >= 0.0) {
        return 1.0 / (1.0 + std::exp(-z));
    }
    const double e = std::exp(z);
    return e / (1.0 + e);
}

// Common contract for every fitted binary classifier: a probability for the
// positive class and the threshold rule on top of it.
class Classifier {
public:
    virtual ~Classifier() = default;

    // P(label == 1 | x), always in [0, 1].
    virtual double predict_proba(std::span<const double> x) const = 0;

    virtual std::size_t feature_count() const = 0;

    // Short id ("lr", "knn", ...) used by serialization and reports.
    virtual std::string kind() const = 0;

    int predict_label(std::span<const double> x, double threshold = 0.5) const {
        return predict_proba(x) >= threshold ? 1 : 0;
    }

    // Scores every row; safe to parallelize because prediction is pure.
    std::vector<double> predict_proba_rows(const Matrix& rows) const;

protected:
    void check_dimension(std::span<const double> x) const {
        if (x.size() != feature_count()) {
            throw DimensionError(kind() + ": expected " + std::to_string(feature_count()) +
                                 " features, got " + std::to_string(x.size()));
        }
    }
};

}  // namespace smokeml
