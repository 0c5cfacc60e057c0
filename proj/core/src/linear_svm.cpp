#include "smokeml/linear_svm.hpp"

#include "smokeml/errors.hpp"
#include "smokeml/rng.hpp"

namespace smokeml {

LinearSvmClassifier LinearSvmClassifier::fit(const Dataset& train, const LinearSvmConfig& cfg) {
    if (cfg.epochs < 1) {
        throw ArgumentError("svm: epochs must be >= 1");
    }
    if (cfg.regularization <= 0.0) {
        throw ArgumentError("svm: regularization must be > 0");
    }
    const std::size_t n = train.n_rows();
    const std::size_t d = train.n_features();
    if (train.count_label(1) == 0 || train.count_label(0) == 0) {
        throw DataError("svm needs both classes in the training set");
    }

    // w has d feature weights plus the bias slot fed by a constant 1.
    std::vector<double> w(d + 1, 0.0);
    Rng rng(cfg.seed);
    const double reg = cfg.regularization;
    std::uint64_t t = 0;
    for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
        for (std::size_t step = 0; step < n; ++step) {
            ++t;
            const std::size_t i = rng.below(n);
            const auto row = train.features().row(i);
            const double y = train.labels()[i] == 1 ? 1.0 : -1.0;

            double margin = w[d];
            for (std::size_t f = 0; f < d; ++f) margin += w[f] * row[f];
            margin *= y;

            const double eta = 1.0 / (reg * static_cast<double>(t));
            const double shrink = 1.0 - eta * reg;  // = 1 - 1/t
            for (double& wf : w) wf *= shrink;
            if (margin < 1.0) {
                for (std::size_t f = 0; f < d; ++f) w[f] += eta * y * row[f];
                w[d] += eta * y;
            }
        }
    }
    const double bias = w[d];
    w.pop_back();
    return LinearSvmClassifier(std::move(w), bias);
}

double LinearSvmClassifier::score(std::span<const double> x) const {
    double z = bias_;
    for (std::size_t f = 0; f < weights_.size(); ++f) z += weights_[f] * x[f];
    return z;
}

double LinearSvmClassifier::predict_proba(std::span<const double> x) const {
    check_dimension(x);
    return sigmoid(score(x));
}

}  // namespace smokeml
