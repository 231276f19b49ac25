#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kgdim/edge.hpp"
#include "kgdim/edge_io.hpp"

namespace kgdim {

// Edge counts per (source, dimension). Edges without a dimension are
// tallied separately as "unassigned" and never enter the dimension cells.
class CoverageMatrix {
public:
  void add(const Edge& edge);
  void merge(const CoverageMatrix& other);

  uint64_t count(std::string_view source, Dimension d) const;
  uint64_t unassigned(std::string_view source) const;

  // Marginals.
  uint64_t source_total(std::string_view source) const;  // dimension cells only
  uint64_t dimension_total(Dimension d) const;
  uint64_t unassigned_total() const;

  std::vector<std::string> sources() const;  // sorted lexicographically
  bool empty() const { return rows_.empty(); }

private:
  struct Row {
    std::array<uint64_t, kDimensionCount> by_dim{};
    uint64_t unassigned = 0;
  };
  std::map<std::string, Row, std::less<>> rows_;
};

struct CoverageOptions {
  // Audit mode: count each distinct (source, node1, relation, node2) once.
  bool dedup = false;
};

CoverageMatrix coverage_counts(std::span<const Edge> edges,
                               CoverageOptions options = {});
CoverageMatrix coverage_counts(EdgeReader& reader,
                               CoverageOptions options = {});

enum class TableFormat { Csv, Markdown };

// Rows are the 13 dimensions in canonical order (plus a final "unassigned"
// row when present), columns the sources in sorted order. Zero cells render
// empty. Deterministic.
std::string render_coverage(const CoverageMatrix& matrix, TableFormat format);

}  // namespace kgdim
