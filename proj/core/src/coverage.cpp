#include "kgdim/coverage.hpp"

#include <sstream>
#include <unordered_set>

namespace kgdim {

void CoverageMatrix::add(const Edge& edge) {
  Row& row = rows_[edge.source];
  if (edge.dimension) {
    ++row.by_dim[static_cast<std::size_t>(*edge.dimension)];
  } else {
    ++row.unassigned;
  }
}

void CoverageMatrix::merge(const CoverageMatrix& other) {
  for (const auto& [source, row] : other.rows_) {
    Row& mine = rows_[source];
    for (std::size_t i = 0; i < kDimensionCount; ++i) {
      mine.by_dim[i] += row.by_dim[i];
    }
    mine.unassigned += row.unassigned;
  }
}

uint64_t CoverageMatrix::count(std::string_view source, Dimension d) const {
  const auto it = rows_.find(source);
  if (it == rows_.end()) return 0;
  return it->second.by_dim[static_cast<std::size_t>(d)];
}

uint64_t CoverageMatrix::unassigned(std::string_view source) const {
  const auto it = rows_.find(source);
  return it == rows_.end() ? 0 : it->second.unassigned;
}

uint64_t CoverageMatrix::source_total(std::string_view source) const {
  const auto it = rows_.find(source);
  if (it == rows_.end()) return 0;
  uint64_t total = 0;
  for (const auto c : it->second.by_dim) total += c;
  return total;
}

uint64_t CoverageMatrix::dimension_total(Dimension d) const {
  uint64_t total = 0;
  for (const auto& [source, row] : rows_) {
    total += row.by_dim[static_cast<std::size_t>(d)];
  }
  return total;
}

uint64_t CoverageMatrix::unassigned_total() const {
  uint64_t total = 0;
  for (const auto& [source, row] : rows_) total += row.unassigned;
  return total;
}

std::vector<std::string> CoverageMatrix::sources() const {
  std::vector<std::string> out;
  out.reserve(rows_.size());
  for (const auto& [source, row] : rows_) out.push_back(source);
  return out;  // std::map keeps them sorted
}

namespace {

std::string dedup_key(const Edge& e) {
  std::string key;
  key.reserve(e.source.size() + e.node1.size() + e.relation.size() +
              e.node2.size() + 3);
  key += e.source;
  key += '\x1f';
  key += e.node1;
  key += '\x1f';
  key += e.relation;
  key += '\x1f';
  key += e.node2;
  return key;
}

template <typename NextFn>
CoverageMatrix count_stream(NextFn&& next, const CoverageOptions& options) {
  CoverageMatrix matrix;
  std::unordered_set<std::string> seen;
  while (auto edge = next()) {
    if (options.dedup && !seen.insert(dedup_key(*edge)).second) continue;
    matrix.add(*edge);
  }
  return matrix;
}

}  // namespace

CoverageMatrix coverage_counts(std::span<const Edge> edges,
                               CoverageOptions options) {
  std::size_t i = 0;
  return count_stream(
      [&]() -> const Edge* { return i < edges.size() ? &edges[i++] : nullptr; },
      options);
}

CoverageMatrix coverage_counts(EdgeReader& reader, CoverageOptions options) {
  return count_stream([&] { return reader.next(); }, options);
}

std::string render_coverage(const CoverageMatrix& matrix, TableFormat format) {
  const auto sources = matrix.sources();
  const bool with_unassigned = matrix.unassigned_total() > 0;
  std::ostringstream out;

  auto cell = [](uint64_t v) { return v == 0 ? std::string() : std::to_string(v); };

  if (format == TableFormat::Csv) {
    out << "dimension";
    for (const auto& s : sources) out << ',' << s;
    out << '\n';
    if (matrix.empty()) return out.str();
    for (const Dimension d : all_dimensions()) {
      out << dimension_name(d);
      for (const auto& s : sources) out << ',' << cell(matrix.count(s, d));
      out << '\n';
    }
    if (with_unassigned) {
      out << "unassigned";
      for (const auto& s : sources) out << ',' << cell(matrix.unassigned(s));
      out << '\n';
    }
  } else {
    out << "| dimension |";
    for (const auto& s : sources) out << ' ' << s << " |";
    out << "\n|---|";
    for (std::size_t i = 0; i < sources.size(); ++i) out << "---|";
    out << '\n';
    if (matrix.empty()) return out.str();
    for (const Dimension d : all_dimensions()) {
      out << "| " << dimension_name(d) << " |";
      for (const auto& s : sources) out << ' ' << cell(matrix.count(s, d)) << " |";
      out << '\n';
    }
    if (with_unassigned) {
      out << "| unassigned |";
      for (const auto& s : sources) out << ' ' << cell(matrix.unassigned(s)) << " |";
      out << '\n';
    }
  }
  return out.str();
}

}  // namespace kgdim
