#include "smokeml/density_ensemble.hpp"

#include <algorithm>
#include <cmath>

#include "smokeml/errors.hpp"
#include "smokeml/neighbors.hpp"
#include "smokeml/parallel.hpp"

namespace smokeml {

namespace {

constexpr double kDensityEpsilon = 1e-9;

double median(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    if (n % 2 == 1) return values[n / 2];
    return 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

void check_region_weights(const RegionWeights& rw) {
    if (rw.alpha_high < 0.0 || rw.alpha_high > 1.0 || rw.alpha_low < 0.0 || rw.alpha_low > 1.0) {
        throw ArgumentError("region weights must lie in [0, 1]");
    }
    if (rw.alpha_high < rw.alpha_low) {
        throw ArgumentError("alpha_high must be >= alpha_low (KNN is favored where density is high)");
    }
}

}  // namespace

double estimate_density(const Matrix& reference, std::span<const double> query, int k_density,
                        std::size_t skip_row) {
    if (k_density < 1) {
        throw ArgumentError("k_density must be >= 1");
    }
    const auto nearest = k_nearest(reference, query, static_cast<std::size_t>(k_density), skip_row);
    double total = 0.0;
    for (const auto& [sq_dist, row] : nearest) total += std::sqrt(sq_dist);
    const double mean = total / static_cast<double>(nearest.size());
    return 1.0 / (kDensityEpsilon + mean);
}

DensityProfile build_density_profile(Matrix reference, int k_density) {
    if (reference.rows() < 2) {
        throw ArgumentError("density profile needs at least 2 reference points");
    }
    DensityProfile profile;
    profile.k_density = k_density;
    profile.densities.resize(reference.rows());
    parallel_for(reference.rows(), [&](std::size_t i) {
        profile.densities[i] = estimate_density(reference, reference.row(i), k_density, i);
    });
    profile.threshold = median(profile.densities);
    profile.reference_points = std::move(reference);
    return profile;
}

DensityRegion classify_region(const DensityProfile& profile, std::span<const double> query) {
    const double density = estimate_density(profile.reference_points, query, profile.k_density);
    return density >= profile.threshold ? DensityRegion::kHigh : DensityRegion::kLow;
}

std::pair<double, double> assign_weights(DensityRegion region, const RegionWeights& rw) {
    check_region_weights(rw);
    const double alpha = region == DensityRegion::kHigh ? rw.alpha_high : rw.alpha_low;
    return {alpha, 1.0 - alpha};
}

WeightedEnsembleModel WeightedEnsembleModel::fit(const Dataset& train,
                                                 const DensityEnsembleConfig& cfg) {
    check_region_weights(cfg.weights);
    KnnClassifier knn = KnnClassifier::fit(train, cfg.knn);
    GbtClassifier gbt = GbtClassifier::fit(train, cfg.gbt);
    DensityProfile profile = build_density_profile(train.features(), cfg.k_density);
    return WeightedEnsembleModel(std::move(knn), std::move(gbt), std::move(profile), cfg.weights);
}

EnsemblePrediction WeightedEnsembleModel::predict(std::span<const double> x) const {
    check_dimension(x);
    EnsemblePrediction out;
    out.region = classify_region(profile_, x);
    const auto [w_knn, w_gbt] = assign_weights(out.region, weights_);
    out.w_knn = w_knn;
    out.w_gbt = w_gbt;
    out.proba = w_knn * knn_.predict_proba(x) + w_gbt * gbt_.predict_proba(x);
    out.label = out.proba >= 0.5 ? 1 : 0;
    return out;
}

}  // namespace smokeml
