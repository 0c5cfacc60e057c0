#include "smokeml/neighbors.hpp"

#include <algorithm>
#include <string>

#include "smokeml/errors.hpp"

namespace smokeml {

std::vector<std::pair<double, std::size_t>> k_nearest(const Matrix& data,
                                                      std::span<const double> query,
                                                      std::size_t k, std::size_t skip_row) {
    const std::size_t n = data.rows();
    const std::size_t available = n - (skip_row < n ? 1 : 0);
    if (k == 0 || k > available) {
        throw ArgumentError("k_nearest: k must be in [1, " + std::to_string(available) +
                            "], got " + std::to_string(k));
    }
    // Bounded max-heap of the k lexicographically smallest (distance, row)
    // pairs, so ties resolve to the lower row index.
    std::vector<std::pair<double, std::size_t>> heap;
    heap.reserve(k + 1);
    for (std::size_t i = 0; i < n; ++i) {
        if (i == skip_row) continue;
        const std::pair<double, std::size_t> entry(squared_distance(data.row(i), query), i);
        if (heap.size() < k) {
            heap.push_back(entry);
            std::push_heap(heap.begin(), heap.end());
        } else if (entry < heap.front()) {
            std::pop_heap(heap.begin(), heap.end());
            heap.back() = entry;
            std::push_heap(heap.begin(), heap.end());
        }
    }
    std::sort_heap(heap.begin(), heap.end());
    return heap;
}

}  // namespace smokeml
