#include <benchmark/benchmark.h>

#include <vector>

#include "kgdim/overlap.hpp"
#include "kgdim/rng.hpp"

namespace {

using namespace kgdim;

std::vector<Edge> synthetic_edges(std::size_t n) {
  static const char* labels[] = {
      "food",  "dish|plate", "comfort food", "  Drink ", "bread", "soup",
      "plate", "cup",        "meal",         "snack",    "fork",  "bowl"};
  static const std::pair<const char*, Dimension> rels[] = {
      {"/r/Synonym", Dimension::Similarity},
      {"/r/Antonym", Dimension::Distinctness},
      {"/r/IsA", Dimension::Taxonomic},
      {"/r/PartOf", Dimension::PartWhole},
  };
  Rng rng(4);
  std::vector<Edge> edges;
  edges.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& [rel, dim] = rels[rng.bounded(std::size(rels))];
    Edge e;
    e.id = "e" + std::to_string(i);
    e.node1 = "n1";
    e.relation = rel;
    e.node2 = "n2";
    e.node1_label = labels[rng.bounded(std::size(labels))];
    e.node2_label = labels[rng.bounded(std::size(labels))];
    e.source = rng.bounded(2) ? "A" : "B";
    e.dimension = dim;
    edges.push_back(std::move(e));
  }
  return edges;
}

void BM_NormalizeNode(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(normalize_node("Comfort_food.n.01|comfort food"));
  }
}
BENCHMARK(BM_NormalizeNode);

void BM_TripleSet(benchmark::State& state) {
  const auto edges = synthetic_edges(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(triple_set(edges, OverlapMode::Dimension));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_TripleSet)->Range(1 << 10, 1 << 16);

void BM_PairwiseOverlap(benchmark::State& state) {
  const auto edges = synthetic_edges(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        pairwise_overlap(edges, {"A", "B"}, OverlapMode::Dimension));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_PairwiseOverlap)->Range(1 << 10, 1 << 16);

}  // namespace
