#include "smokeml/smote.hpp"

#include <algorithm>
#include <iostream>

#include "smokeml/errors.hpp"
#include "smokeml/parallel.hpp"
#include "smokeml/rng.hpp"

namespace smokeml {

std::vector<double> smote_interpolate(std::span<const double> x,
                                      std::span<const double> neighbor, double u) {
    std::vector<double> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        out[i] = x[i] + u * (neighbor[i] - x[i]);
    }
    return out;
}

namespace {

// k nearest minority neighbours of minority point `self`, self excluded,
// distance ties broken by lower row index.
std::vector<std::size_t> nearest_neighbors(const Matrix& minority, std::size_t self, int k) {
    std::vector<std::pair<double, std::size_t>> dist;
    dist.reserve(minority.rows() - 1);
    const auto q = minority.row(self);
    for (std::size_t i = 0; i < minority.rows(); ++i) {
        if (i == self) continue;
        dist.push_back({squared_distance(q, minority.row(i)), i});
    }
    const std::size_t kk = std::min<std::size_t>(static_cast<std::size_t>(k), dist.size());
    std::partial_sort(dist.begin(), dist.begin() + kk, dist.end());
    std::vector<std::size_t> out(kk);
    for (std::size_t i = 0; i < kk; ++i) out[i] = dist[i].second;
    return out;
}

}  // namespace

Dataset smote_oversample(const Dataset& d, const SmoteConfig& cfg) {
    if (cfg.k_neighbors < 1) {
        throw ArgumentError("smote k_neighbors must be >= 1");
    }
    const std::size_t n_pos = d.count_label(1);
    const std::size_t n_neg = d.n_rows() - n_pos;
    if (n_pos == n_neg) {
        return d;  // already balanced
    }
    const int minority_label = n_pos < n_neg ? 1 : 0;
    const std::size_t n_minority = std::min(n_pos, n_neg);
    const std::size_t n_majority = std::max(n_pos, n_neg);
    if (n_minority < 2) {
        throw DataError("smote needs at least 2 minority samples, have " +
                        std::to_string(n_minority));
    }

    const std::size_t target = cfg.target_count.value_or(n_majority);
    if (target < n_minority) {
        throw ArgumentError("smote target_count " + std::to_string(target) +
                            " is below the minority count " + std::to_string(n_minority));
    }
    const std::size_t n_synthetic = target - n_minority;
    if (n_synthetic == 0) {
        return d;
    }

    int k = cfg.k_neighbors;
    if (static_cast<std::size_t>(k) > n_minority - 1) {
        k = static_cast<int>(n_minority - 1);
        std::cerr << "smote: k_neighbors clamped to " << k << " (minority has "
                  << n_minority << " samples)\n";
    }

    std::vector<std::size_t> minority_rows;
    minority_rows.reserve(n_minority);
    for (std::size_t r = 0; r < d.n_rows(); ++r) {
        if (d.labels()[r] == minority_label) minority_rows.push_back(r);
    }
    const Matrix minority = d.features().gather_rows(minority_rows);

    // Parents cycle round-robin over minority points; only the ones that are
    // actually used need neighbour lists.
    const std::size_t n_parents = std::min(n_minority, n_synthetic);
    std::vector<std::vector<std::size_t>> neighbors(n_parents);
    parallel_for(n_parents, [&](std::size_t i) { neighbors[i] = nearest_neighbors(minority, i, k); });

    Matrix features = d.features();
    features.reserve_rows(d.n_rows() + n_synthetic);
    std::vector<int> labels = d.labels();
    labels.reserve(d.n_rows() + n_synthetic);

    Rng rng(cfg.seed);
    for (std::size_t s = 0; s < n_synthetic; ++s) {
        const std::size_t parent = s % n_minority;
        const auto& nn = neighbors[parent];
        const std::size_t pick = nn[rng.below(nn.size())];
        const double u = rng.uniform();
        features.append_row(smote_interpolate(minority.row(parent), minority.row(pick), u));
        labels.push_back(minority_label);
    }
    return Dataset(d.schema(), std::move(features), std::move(labels));
}

}  // namespace smokeml
