#include <benchmark/benchmark.h>

#include "kgdim/clustering.hpp"
#include "kgdim/rng.hpp"

namespace {

using namespace kgdim;

VectorTable random_vectors(std::size_t n, std::size_t width) {
  Rng rng(9);
  std::vector<std::string> ids;
  std::vector<std::vector<double>> rows;
  for (std::size_t i = 0; i < n; ++i) {
    ids.push_back("p" + std::to_string(i));
    std::vector<double> row(width);
    for (auto& x : row) x = rng.unit() * 100.0;
    rows.push_back(std::move(row));
  }
  return VectorTable::from_rows(std::move(ids), std::move(rows));
}

void BM_KMeans(benchmark::State& state) {
  const auto table =
      random_vectors(static_cast<std::size_t>(state.range(0)), 32);
  KMeansOptions options;
  options.k = 13;
  options.seed = 0;
  options.max_iter = 20;
  options.threads = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kmeans(table, options));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_KMeans)
    ->Args({2000, 1})
    ->Args({2000, 4})
    ->Args({20000, 1})
    ->Args({20000, 4});

}  // namespace
