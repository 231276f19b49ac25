#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kgdim/edge.hpp"
#include "kgdim/mapping.hpp"

namespace kgdim {

struct EnrichStats {
  uint64_t input = 0;
  uint64_t mapped = 0;
  uint64_t excluded = 0;
  std::map<std::string, uint64_t> unmapped;  // per-relation tally

  uint64_t unmapped_total() const;
  // Addition is associative and commutative, so stats from parallel
  // partitions merge in any order.
  void merge(const EnrichStats& other);
};

// The dimension-enrichment pass. Mapped relations get their dimension set,
// excluded relations drop the edge, unmapped relations pass the edge through
// with no dimension (and are tallied). Idempotent.
class DimensionAssigner {
public:
  explicit DimensionAssigner(const MappingTable& table) : table_(table) {}

  // nullopt means the edge was dropped (excluded relation).
  std::optional<Edge> operator()(Edge edge);

  const EnrichStats& stats() const { return stats_; }

private:
  const MappingTable& table_;
  EnrichStats stats_;
};

std::vector<Edge> assign_dimensions(std::vector<Edge> edges,
                                    const MappingTable& table,
                                    EnrichStats* stats = nullptr);

}  // namespace kgdim
