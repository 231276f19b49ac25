#pragma once

#include <array>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "kgdim/edge.hpp"

namespace kgdim {

// Canonical column order of the edge TSV. Input needs at least the first
// four; output always carries all ten.
inline constexpr std::array<std::string_view, 10> kEdgeColumns = {
    "id",          "node1",         "relation",
    "node2",       "node1;label",   "node2;label",
    "relation;label", "relation;dimension", "source",
    "sentence"};

struct ReadOptions {
  // When set, only edges whose source is in the set are yielded; the rest
  // are counted as filtered.
  std::optional<std::unordered_set<std::string>> source_filter;
  // strict: any malformed row is fatal. Otherwise bad rows are skipped and
  // counted, with the first few kept for reporting.
  bool strict = false;
};

struct RowIssue {
  uint64_t line = 0;
  std::string message;
};

struct ReadStats {
  uint64_t rows = 0;      // data rows seen (header excluded)
  uint64_t yielded = 0;
  uint64_t filtered = 0;  // removed by source_filter
  uint64_t bad = 0;       // malformed, skipped in non-strict mode
  std::vector<RowIssue> issues;  // capped sample of the bad rows
};

// Single sequential pass over an edge TSV; constant memory in the number of
// rows.
class EdgeReader {
public:
  // Reads and validates the header. Throws DataError when a mandatory
  // column is missing.
  explicit EdgeReader(std::istream& in, ReadOptions options = {});

  // Next edge in file order, or nullopt at end of input.
  std::optional<Edge> next();

  const ReadStats& stats() const { return stats_; }

private:
  static constexpr std::size_t kMaxIssues = 64;

  std::istream& in_;
  ReadOptions options_;
  ReadStats stats_;
  uint64_t lineno_ = 1;  // header consumed in constructor
  std::size_t n_columns_ = 0;
  // index of each known column in the file, -1 when absent
  std::array<int, kEdgeColumns.size()> col_{};

  void fail_row(uint64_t line, std::string message);
};

std::vector<Edge> read_edges(std::istream& in, ReadOptions options = {},
                             ReadStats* stats = nullptr);

// Emits the full 10-column header, then one row per write(). Fields must be
// free of tab/newline; offending rows throw instead of being mangled.
class EdgeWriter {
public:
  explicit EdgeWriter(std::ostream& out);
  void write(const Edge& edge);
  uint64_t count() const { return count_; }

private:
  std::ostream& out_;
  uint64_t count_ = 0;
};

uint64_t write_edges(std::span<const Edge> edges, std::ostream& out);

}  // namespace kgdim
