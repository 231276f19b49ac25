#include "kgdim/enrich.hpp"

namespace kgdim {

uint64_t EnrichStats::unmapped_total() const {
  uint64_t total = 0;
  for (const auto& [relation, count] : unmapped) total += count;
  return total;
}

void EnrichStats::merge(const EnrichStats& other) {
  input += other.input;
  mapped += other.mapped;
  excluded += other.excluded;
  for (const auto& [relation, count] : other.unmapped) {
    unmapped[relation] += count;
  }
}

std::optional<Edge> DimensionAssigner::operator()(Edge edge) {
  ++stats_.input;
  const auto result = table_.lookup(edge.relation, edge.source);
  switch (result.status) {
    case MappingTable::Status::Mapped:
      ++stats_.mapped;
      edge.dimension = result.entry->dimension;
      return edge;
    case MappingTable::Status::Excluded:
      ++stats_.excluded;
      return std::nullopt;
    case MappingTable::Status::Unmapped:
      ++stats_.unmapped[edge.relation];
      edge.dimension.reset();
      return edge;
  }
  return std::nullopt;  // unreachable
}

std::vector<Edge> assign_dimensions(std::vector<Edge> edges,
                                    const MappingTable& table,
                                    EnrichStats* stats) {
  DimensionAssigner assigner(table);
  std::vector<Edge> out;
  out.reserve(edges.size());
  for (Edge& edge : edges) {
    if (auto enriched = assigner(std::move(edge))) {
      out.push_back(std::move(*enriched));
    }
  }
  if (stats != nullptr) *stats = assigner.stats();
  return out;
}

}  // namespace kgdim
