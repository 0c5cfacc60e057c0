#pragma once

#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "smokeml/classifier.hpp"
#include "smokeml/dataset.hpp"
#include "smokeml/gbt.hpp"
#include "smokeml/knn.hpp"

namespace smokeml {

enum class DensityRegion { kHigh, kLow };

inline const char* region_name(DensityRegion region) {
    return region == DensityRegion::kHigh ? "high" : "low";
}

// Local densities of the training points and the HIGH/LOW boundary.
struct DensityProfile {
    Matrix reference_points;  // normalized training features
    int k_density = 10;
    std::vector<double> densities;  // one per reference point, self excluded
    double threshold = 0.0;         // median of densities
};

// density = 1 / (epsilon + mean Euclidean distance to the k_density nearest
// reference points); epsilon = 1e-9 caps the density of coincident points.
// `skip_row` excludes one reference row for self-queries.
double estimate_density(const Matrix& reference, std::span<const double> query, int k_density,
                        std::size_t skip_row = std::numeric_limits<std::size_t>::max());

// Densities of every reference point against its own set (self excluded) and
// the median threshold between HIGH and LOW.
DensityProfile build_density_profile(Matrix reference, int k_density);

// HIGH iff the query's density is >= the profile threshold.
DensityRegion classify_region(const DensityProfile& profile, std::span<const double> query);

struct RegionWeights {
    double alpha_high = 0.7;  // KNN weight in the HIGH-density region
    double alpha_low = 0.3;   // KNN weight in the LOW-density region

    bool operator==(const RegionWeights&) const = default;
};

// (w_knn, w_gbt) for a region; the pair always sums to exactly 1.
std::pair<double, double> assign_weights(DensityRegion region, const RegionWeights& rw);

struct DensityEnsembleConfig {
    KnnConfig knn;
    GbtConfig gbt;
    int k_density = 10;
    RegionWeights weights;
};

struct EnsemblePrediction {
    double proba = 0.0;
    int label = 0;
    DensityRegion region = DensityRegion::kHigh;
    double w_knn = 0.0;
    double w_gbt = 0.0;
};

// The locally weighted KNN + GBT ensemble: the query's density region picks
// the convex weighting of the two experts' probabilities.
class WeightedEnsembleModel final : public Classifier {
public:
    static WeightedEnsembleModel fit(const Dataset& train, const DensityEnsembleConfig& cfg);

    EnsemblePrediction predict(std::span<const double> x) const;

    double predict_proba(std::span<const double> x) const override { return predict(x).proba; }
    std::size_t feature_count() const override { return knn_.feature_count(); }
    std::string kind() const override { return "ensemble"; }

    const KnnClassifier& knn() const { return knn_; }
    const GbtClassifier& gbt() const { return gbt_; }
    const DensityProfile& profile() const { return profile_; }
    const RegionWeights& weights() const { return weights_; }

    WeightedEnsembleModel(KnnClassifier knn, GbtClassifier gbt, DensityProfile profile,
                          RegionWeights weights)
        : knn_(std::move(knn)),
          gbt_(std::move(gbt)),
          profile_(std::move(profile)),
          weights_(weights) {}

private:
    KnnClassifier knn_;
    GbtClassifier gbt_;
    DensityProfile profile_;
    RegionWeights weights_;
};

}  // namespace smokeml
