#include <benchmark/benchmark.h>

#include <sstream>

#include "kgdim/edge_io.hpp"
#include "kgdim/enrich.hpp"
#include "kgdim/mapping.hpp"
#include "kgdim/rng.hpp"

namespace {

using namespace kgdim;

std::string synthetic_tsv(std::size_t n) {
  static const char* rels[] = {"/r/Synonym", "/r/IsA", "/r/PartOf",
                               "/r/RelatedTo", "/r/UnknownRel"};
  Rng rng(1);
  std::ostringstream out;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    Edge e;
    e.id = "e" + std::to_string(i);
    e.node1 = "/c/en/node" + std::to_string(rng.bounded(1000));
    e.relation = rels[rng.bounded(std::size(rels))];
    e.node2 = "/c/en/node" + std::to_string(rng.bounded(1000));
    e.node1_label = "some label text";
    e.node2_label = "другая метка|another label";
    e.relation_label = "relation label";
    e.source = rng.bounded(2) ? "CN" : "WN";
    edges.push_back(std::move(e));
  }
  write_edges(edges, out);
  return out.str();
}

void BM_ReadEdges(benchmark::State& state) {
  const std::string tsv = synthetic_tsv(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    std::istringstream in(tsv);
    benchmark::DoNotOptimize(read_edges(in));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
  state.SetBytesProcessed(state.iterations() * tsv.size());
}
BENCHMARK(BM_ReadEdges)->Range(1 << 10, 1 << 16);

void BM_AssignDimensions(benchmark::State& state) {
  const std::string tsv = synthetic_tsv(static_cast<std::size_t>(state.range(0)));
  std::istringstream in(tsv);
  const auto edges = read_edges(in);
  for (auto _ : state) {
    auto copy = edges;
    benchmark::DoNotOptimize(assign_dimensions(std::move(copy), default_mapping()));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_AssignDimensions)->Range(1 << 10, 1 << 16);

}  // namespace
