#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "smokeml/dataset.hpp"

namespace smokeml {

struct SmoteConfig {
    int k_neighbors = 5;
    // Minority size to reach; nullopt means match the majority class.
    std::optional<std::size_t> target_count;
    std::uint64_t seed = 0;
};

// x + u * (neighbor - x), the interpolation every synthetic sample uses.
std::vector<double> smote_interpolate(std::span<const double> x,
                                      std::span<const double> neighbor, double u);

// Oversamples the minority class by interpolating between each minority
// point (round-robin) and one of its k nearest minority neighbours.
// Synthetic rows are appended after the originals; original rows are
// untouched. A balanced input is returned unchanged. Expects features
// already normalized so Euclidean distances are scale-comparable.
Dataset smote_oversample(const Dataset& d, const SmoteConfig& cfg);

}  // namespace smokeml
