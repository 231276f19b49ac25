#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "kgdim/edge.hpp"
#include "kgdim/edge_io.hpp"

namespace kgdim {

// Label -> node key: first label of a multi-valued field, WordNet sense
// suffixes (lemma.p.NN) stripped to the lemma with underscores as spaces,
// whitespace trimmed and collapsed, case-folded. Empty keys are legal and
// match only other empties.
std::string normalize_node(std::string_view label);

enum class OverlapMode { Relation, Dimension };

std::string_view overlap_mode_name(OverlapMode mode);

// Encoded (head_key, rel_key, tail_key) with '\x1f' separators. rel_key is
// the relation in relation mode and the dimension name in dimension mode.
// nullopt in dimension mode when the edge has no dimension.
std::optional<std::string> triple_key(const Edge& edge, OverlapMode mode);

struct TripleSet {
  std::unordered_set<std::string> keys;
  uint64_t skipped_dimensionless = 0;
};

TripleSet triple_set(std::span<const Edge> edges, OverlapMode mode);

struct JaccardResult {
  uint64_t intersection = 0;
  uint64_t unions = 0;
  double jaccard = 0.0;  // 0 when the union is empty
};

JaccardResult jaccard(const std::unordered_set<std::string>& a,
                      const std::unordered_set<std::string>& b);

struct OverlapReport {
  std::string source_a;
  std::string source_b;
  OverlapMode mode = OverlapMode::Relation;
  JaccardResult all;
  // Dimension mode only. A key is present when at least one of the two
  // sources has triples of that dimension; nullopt marks the cell where the
  // other source lacks it entirely (rendered '-'-like, as an empty cell).
  std::map<Dimension, std::optional<JaccardResult>> per_dimension;
  uint64_t skipped_dimensionless = 0;
};

// One report per unordered source pair, in the order induced by `sources`.
// Throws DataError when fewer than two sources are given, a source is
// listed twice, or a listed source never occurs in the input.
std::vector<OverlapReport> pairwise_overlap(std::span<const Edge> edges,
                                            const std::vector<std::string>& sources,
                                            OverlapMode mode);
std::vector<OverlapReport> pairwise_overlap(EdgeReader& reader,
                                            const std::vector<std::string>& sources,
                                            OverlapMode mode);

// CSV: sourceA,sourceB,mode,dimension,intersection,union,jaccard with one
// ALL row per pair and, in dimension mode, one row per applicable dimension.
std::string render_overlap_csv(std::span<const OverlapReport> reports);

}  // namespace kgdim
