#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "smokeml/matrix.hpp"
#include "smokeml/schema.hpp"

namespace smokeml {

// Feature matrix plus binary labels (1 = fire alarm). Immutable after
// construction; transformations return new datasets.
class Dataset {
public:
    Dataset() = default;
    Dataset(ColumnSchema schema, Matrix features, std::vector<int> labels);

    const ColumnSchema& schema() const { return schema_; }
    const Matrix& features() const { return features_; }
    const std::vector<int>& labels() const { return labels_; }

    std::size_t n_rows() const { return features_.rows(); }
    std::size_t n_features() const { return features_.cols(); }
    std::size_t count_label(int label) const;

    Dataset select_rows(const std::vector<std::size_t>& indices) const;
    Dataset drop_features(const std::vector<std::string>& names) const;

    bool operator==(const Dataset&) const = default;

private:
    ColumnSchema schema_{{}, "label", false};
    Matrix features_;
    std::vector<int> labels_;
};

// Shortest decimal form that parses back to the same double; used by the CSV
// writer and the config emitter so round-trips are exact.
std::string format_double(double v);

// CSV reader for the dialect used throughout: comma separated, header row,
// UTF-8, '.' decimal point. An unnamed leading index column is tolerated and
// dropped. Columns are matched by name (unit suffixes like "[C]" and spacing
// differences are ignored) and reordered to schema order.
Dataset load_dataset(const std::string& path, const ColumnSchema& schema);

// Writes the same dialect the reader accepts: schema columns in order, then
// the target. Values round-trip exactly.
void save_dataset(const std::string& path, const Dataset& d);

struct CleanResult {
    Dataset data;
    std::size_t dropped_rows = 0;
};

// Removes rows containing NaN or infinite feature values. No deduplication.
CleanResult clean(const Dataset& d);

enum class NormalizationMethod { kMinMax, kZScore };

// Per-feature statistics fitted on one dataset, applicable to unseen rows.
// Constant features map to all-zeros under either method.
class NormalizationParams {
public:
    NormalizationParams(NormalizationMethod method, std::vector<double> offsets,
                        std::vector<double> scales);

    NormalizationMethod method() const { return method_; }
    std::size_t feature_count() const { return offsets_.size(); }

    // min (min_max) or mean (z_score) per feature.
    const std::vector<double>& offsets() const { return offsets_; }
    // max - min (min_max) or population stddev (z_score); 0 marks a constant feature.
    const std::vector<double>& scales() const { return scales_; }

    double transform(double value, std::size_t feature) const {
        const double s = scales_[feature];
        return s == 0.0 ? 0.0 : (value - offsets_[feature]) / s;
    }

private:
    NormalizationMethod method_;
    std::vector<double> offsets_;
    std::vector<double> scales_;
};

NormalizationParams fit_normalizer(const Dataset& d, NormalizationMethod method);
Dataset apply_normalizer(const Dataset& d, const NormalizationParams& p);

struct SplitIndices {
    std::vector<std::size_t> train_indices;
    std::vector<std::size_t> test_indices;
    std::uint64_t seed = 0;
    double test_fraction = 0.0;
};

// Seeded uniform shuffle, then partition; |test| = round(test_fraction * n).
// Index lists are returned sorted ascending. stratified=true keeps the class
// ratio in both parts while preserving the exact test size.
SplitIndices train_test_split(const Dataset& d, double test_fraction, std::uint64_t seed,
                              bool stratified = false);

struct FeatureCorrelation {
    std::string feature;
    double r = 0.0;
};

// Pearson correlation of each feature with the binary label, sorted by |r|
// descending. Constant feature or constant label yields r = 0.
std::vector<FeatureCorrelation> feature_target_correlation(const Dataset& d);

// Two Gaussian clusters over the default smoke schema, class-conditionally
// shifted by `separation` on the sensor columns. UTC increments by one per
// row and CNT counts rows, so neither carries label information.
Dataset generate_synthetic(std::size_t n_per_class, double separation, std::uint64_t seed);

}  // namespace smokeml
