#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "smokeml/matrix.hpp"

namespace smokeml {

// The k nearest rows of `data` to `query` by Euclidean distance, as
// (squared distance, row index) pairs sorted ascending; equal distances break
// toward the lower row index. `skip_row` excludes one row (for self-queries).
std::vector<std::pair<double, std::size_t>> k_nearest(
    const Matrix& data, std::span<const double> query, std::size_t k,
    std::size_t skip_row = std::numeric_limits<std::size_t>::max());

}  // namespace smokeml
