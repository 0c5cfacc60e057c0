#include "smokeml/adaboost.hpp"

#include <algorithm>
#include <cmath>

#include "smokeml/errors.hpp"

namespace smokeml {

namespace {

int stump_vote(const Tree& stump, std::span<const double> x) {
    return stump.evaluate(x) >= 0.5 ? 1 : -1;
}

}  // namespace

double AdaBoostClassifier::alpha_from_error(double eps) {
    eps = std::clamp(eps, 1e-12, 1.0 - 1e-12);
    return 0.5 * std::log((1.0 - eps) / eps);
}

AdaBoostClassifier AdaBoostClassifier::fit(const Dataset& train, const AdaBoostConfig& cfg) {
    if (cfg.n_rounds < 1) {
        throw ArgumentError("adaboost: n_rounds must be >= 1");
    }
    if (train.n_rows() == 0) {
        throw DataError("cannot fit adaboost on an empty dataset");
    }
    const std::size_t n = train.n_rows();
    const Matrix& x = train.features();
    const std::vector<int>& y = train.labels();

    std::vector<double> weights(n, 1.0 / static_cast<double>(n));
    std::vector<std::size_t> all_rows(n);
    for (std::size_t i = 0; i < n; ++i) all_rows[i] = i;

    std::vector<Tree> stumps;
    std::vector<double> alphas;
    std::vector<int> votes(n);
    for (int round = 0; round < cfg.n_rounds; ++round) {
        GiniTreeOptions options;
        options.max_depth = 1;
        Tree stump = build_gini_tree(x, y, weights, all_rows, options);

        double eps = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            votes[i] = stump_vote(stump, x.row(i));
            const int truth = y[i] == 1 ? 1 : -1;
            if (votes[i] != truth) eps += weights[i];
        }
        if (eps >= 0.5) {
            break;  // no better than re-weighted chance
        }
        const double alpha = alpha_from_error(eps);
        stumps.push_back(std::move(stump));
        alphas.push_back(alpha);
        if (eps <= 0.0) {
            break;  // perfect stump; nothing left to re-weight
        }

        double total = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const int truth = y[i] == 1 ? 1 : -1;
            weights[i] *= std::exp(-alpha * truth * votes[i]);
            total += weights[i];
        }
        for (double& w : weights) w /= total;
    }
    return AdaBoostClassifier(std::move(stumps), std::move(alphas), train.n_features());
}

double AdaBoostClassifier::predict_proba(std::span<const double> x) const {
    check_dimension(x);
    double margin = 0.0;
    for (std::size_t t = 0; t < stumps_.size(); ++t) {
        margin += alphas_[t] * stump_vote(stumps_[t], x);
    }
    return sigmoid(2.0 * margin);
}

}  // namespace smokeml
