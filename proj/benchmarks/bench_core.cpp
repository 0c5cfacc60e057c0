// Microbenchmarks for the hot paths: neighbor search, boosting, resampling,
// density profiling, and metric assembly. Sizes are set via ->Arg / ->Args.

#include <benchmark/benchmark.h>

#include <cstddef>
#include <vector>

#include "smokeml/dataset.hpp"
#include "smokeml/density_ensemble.hpp"
#include "smokeml/gbt.hpp"
#include "smokeml/knn.hpp"
#include "smokeml/metrics.hpp"
#include "smokeml/rng.hpp"
#include "smokeml/smote.hpp"

namespace {

using namespace smokeml;

// Two shifted Gaussian blobs, `n` rows total, `dim` features.
Dataset blobs(std::size_t n, std::size_t dim, std::uint64_t seed) {
    Rng rng(seed);
    Matrix features(n, dim);
    std::vector<int> labels(n);
    std::vector<std::string> names;
    for (std::size_t c = 0; c < dim; ++c) names.push_back("f" + std::to_string(c));
    for (std::size_t r = 0; r < n; ++r) {
        const int label = int(r % 2);
        labels[r] = label;
        for (std::size_t c = 0; c < dim; ++c) {
            features(r, c) = rng.gaussian() + 2.0 * label;
        }
    }
    return Dataset(ColumnSchema::from_names(names, "y"), std::move(features), labels);
}

void BM_KnnPredict(benchmark::State& state) {
    const auto n = std::size_t(state.range(0));
    const Dataset train = blobs(n, 14, 1);
    const auto model = KnnClassifier::fit(train, {.k = 5});
    const std::vector<double> query(14, 0.5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(model.predict_proba(query));
    }
    state.SetItemsProcessed(std::int64_t(state.iterations()) * std::int64_t(n));
}
BENCHMARK(BM_KnnPredict)->Arg(1000)->Arg(10000)->Arg(50000);

void BM_GbtFit(benchmark::State& state) {
    const auto n = std::size_t(state.range(0));
    const int rounds = int(state.range(1));
    const Dataset train = blobs(n, 14, 2);
    for (auto _ : state) {
        auto model = GbtClassifier::fit(train, {.n_rounds = rounds, .max_depth = 6});
        benchmark::DoNotOptimize(model.trees().size());
    }
}
BENCHMARK(BM_GbtFit)->Args({1000, 10})->Args({4000, 10})->Args({1000, 100});

void BM_Smote(benchmark::State& state) {
    const auto n = std::size_t(state.range(0));
    Rng rng(3);
    std::vector<std::vector<double>> rows;
    std::vector<int> labels;
    for (std::size_t i = 0; i < n; ++i) {
        rows.push_back({rng.uniform(), rng.uniform(), rng.uniform(), rng.uniform()});
        labels.push_back(i < n / 4 ? 1 : 0);  // 1:3 imbalance
    }
    std::vector<std::string> names{"f0", "f1", "f2", "f3"};
    const Dataset d(ColumnSchema::from_names(names, "y"), Matrix::from_rows(rows), labels);
    for (auto _ : state) {
        auto balanced = smote_oversample(d, {.k_neighbors = 5, .seed = 7});
        benchmark::DoNotOptimize(balanced.n_rows());
    }
}
BENCHMARK(BM_Smote)->Arg(1000)->Arg(10000);

void BM_DensityProfile(benchmark::State& state) {
    const auto n = std::size_t(state.range(0));
    const Dataset train = blobs(n, 14, 4);
    for (auto _ : state) {
        auto profile = build_density_profile(train.features(), 10);
        benchmark::DoNotOptimize(profile.threshold);
    }
    state.SetComplexityN(std::int64_t(n));
}
BENCHMARK(BM_DensityProfile)->Arg(500)->Arg(2000)->Arg(8000)->Complexity();

void BM_Metrics(benchmark::State& state) {
    const auto n = std::size_t(state.range(0));
    Rng rng(5);
    std::vector<double> scores(n);
    std::vector<int> labels(n);
    for (std::size_t i = 0; i < n; ++i) {
        labels[i] = int(rng.below(2));
        scores[i] = rng.uniform() * 0.5 + 0.5 * labels[i];
    }
    labels[0] = 0;
    labels[1] = 1;
    for (auto _ : state) {
        std::vector<int> predictions(n);
        for (std::size_t i = 0; i < n; ++i) predictions[i] = scores[i] >= 0.5 ? 1 : 0;
        auto report = metrics_from_cm(confusion(labels, predictions));
        report.auc = auc_roc(scores, labels);
        benchmark::DoNotOptimize(report.mcc);
    }
}
BENCHMARK(BM_Metrics)->Arg(10000)->Arg(100000);

}  // namespace

BENCHMARK_MAIN();
