#include "kgdim/edge_io.hpp"

#include <algorithm>

#include "kgdim/error.hpp"
#include "kgdim/text.hpp"

namespace kgdim {

namespace {

enum Col : std::size_t {
  kId = 0,
  kNode1,
  kRelation,
  kNode2,
  kNode1Label,
  kNode2Label,
  kRelationLabel,
  kDimension,
  kSource,
  kSentence,
};

constexpr std::size_t kMandatoryColumns = 4;  // id, node1, relation, node2

}  // namespace

EdgeReader::EdgeReader(std::istream& in, ReadOptions options)
    : in_(in), options_(std::move(options)) {
  col_.fill(-1);
  std::string header;
  if (!std::getline(in_, header)) {
    throw DataError("edge file is empty (expected header)");
  }
  if (!header.empty() && header.back() == '\r') header.pop_back();
  const auto names = split_tabs(header);
  n_columns_ = names.size();
  for (std::size_t i = 0; i < names.size(); ++i) {
    const auto it = std::find(kEdgeColumns.begin(), kEdgeColumns.end(), names[i]);
    if (it != kEdgeColumns.end()) {
      col_[static_cast<std::size_t>(it - kEdgeColumns.begin())] =
          static_cast<int>(i);
    }
  }
  for (std::size_t c = 0; c < kMandatoryColumns; ++c) {
    if (col_[c] < 0) {
      throw DataError("edge file header is missing mandatory column '" +
                      std::string(kEdgeColumns[c]) + "'");
    }
  }
}

void EdgeReader::fail_row(uint64_t line, std::string message) {
  if (options_.strict) {
    throw DataError("edge file line " + std::to_string(line) + ": " + message);
  }
  ++stats_.bad;
  if (stats_.issues.size() < kMaxIssues) {
    stats_.issues.push_back({line, std::move(message)});
  }
}

std::optional<Edge> EdgeReader::next() {
  std::string line;
  while (std::getline(in_, line)) {
    const uint64_t lineno = ++lineno_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    ++stats_.rows;
    const auto fields = split_tabs(line);
    if (fields.size() != n_columns_) {
      fail_row(lineno, "expected " + std::to_string(n_columns_) +
                           " fields, got " + std::to_string(fields.size()));
      continue;
    }
    auto field = [&](std::size_t c) -> std::string_view {
      return col_[c] < 0 ? std::string_view{}
                         : fields[static_cast<std::size_t>(col_[c])];
    };

    if (field(kNode1).empty() || field(kRelation).empty() ||
        field(kNode2).empty()) {
      fail_row(lineno, "node1, relation and node2 must be non-empty");
      continue;
    }

    Edge edge;
    edge.id = std::string(field(kId));
    edge.node1 = std::string(field(kNode1));
    edge.relation = std::string(field(kRelation));
    edge.node2 = std::string(field(kNode2));
    edge.node1_label = std::string(field(kNode1Label));
    edge.node2_label = std::string(field(kNode2Label));
    edge.relation_label = std::string(field(kRelationLabel));
    edge.source = std::string(field(kSource));
    edge.sentence = std::string(field(kSentence));
    if (const auto dim = field(kDimension); !dim.empty()) {
      const auto parsed = parse_dimension(dim);
      if (!parsed) {
        fail_row(lineno, "unknown dimension '" + std::string(dim) + "'");
        continue;
      }
      edge.dimension = *parsed;
    }

    if (options_.source_filter &&
        options_.source_filter->count(edge.source) == 0) {
      ++stats_.filtered;
      continue;
    }
    ++stats_.yielded;
    return edge;
  }
  return std::nullopt;
}

std::vector<Edge> read_edges(std::istream& in, ReadOptions options,
                             ReadStats* stats) {
  EdgeReader reader(in, std::move(options));
  std::vector<Edge> edges;
  while (auto edge = reader.next()) {
    edges.push_back(std::move(*edge));
  }
  if (stats != nullptr) *stats = reader.stats();
  return edges;
}

EdgeWriter::EdgeWriter(std::ostream& out) : out_(out) {
  for (std::size_t i = 0; i < kEdgeColumns.size(); ++i) {
    if (i > 0) out_ << '\t';
    out_ << kEdgeColumns[i];
  }
  out_ << '\n';
}

void EdgeWriter::write(const Edge& edge) {
  const std::string_view dim =
      edge.dimension ? dimension_name(*edge.dimension) : std::string_view{};
  const std::string_view fields[] = {
      edge.id,          edge.node1,       edge.relation,      edge.node2,
      edge.node1_label, edge.node2_label, edge.relation_label, dim,
      edge.source,      edge.sentence};
  for (const auto f : fields) {
    if (!tsv_safe(f)) {
      throw DataError("illegal control character in field of edge '" +
                      edge.id + "'");
    }
  }
  for (std::size_t i = 0; i < std::size(fields); ++i) {
    if (i > 0) out_ << '\t';
    out_ << fields[i];
  }
  out_ << '\n';
  ++count_;
}

uint64_t write_edges(std::span<const Edge> edges, std::ostream& out) {
  EdgeWriter writer(out);
  for (const Edge& e : edges) writer.write(e);
  return writer.count();
}

}  // namespace kgdim
