#include "kgdim/overlap.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <sstream>

#include "kgdim/error.hpp"
#include "kgdim/text.hpp"

namespace kgdim {

namespace {

// WordNet-style sense suffix: "<lemma>.<pos>.<NN>" with a single-letter pos
// and a two-digit sense number, e.g. "comfort_food.n.01".
std::optional<std::string> strip_sense_suffix(std::string_view s) {
  if (s.size() < 6) return std::nullopt;
  const std::size_t n = s.size();
  if (!std::isdigit(static_cast<unsigned char>(s[n - 1])) ||
      !std::isdigit(static_cast<unsigned char>(s[n - 2])) ||
      s[n - 3] != '.' ||
      !std::isalpha(static_cast<unsigned char>(s[n - 4])) ||
      s[n - 5] != '.') {
    return std::nullopt;
  }
  std::string lemma(s.substr(0, n - 5));
  if (lemma.empty()) return std::nullopt;
  std::replace(lemma.begin(), lemma.end(), '_', ' ');
  return lemma;
}

constexpr char kSep = '\x1f';

}  // namespace

std::string normalize_node(std::string_view label) {
  std::string_view first = first_label(label);
  // Trim before the sense check so that " food.n.01 " still matches.
  std::string collapsed = collapse_whitespace(first);
  if (auto lemma = strip_sense_suffix(collapsed)) {
    collapsed = collapse_whitespace(*lemma);
  }
  return case_fold(collapsed);
}

std::string_view overlap_mode_name(OverlapMode mode) {
  return mode == OverlapMode::Relation ? "relation" : "dimension";
}

std::optional<std::string> triple_key(const Edge& edge, OverlapMode mode) {
  std::string_view rel;
  if (mode == OverlapMode::Relation) {
    rel = edge.relation;
  } else {
    if (!edge.dimension) return std::nullopt;
    rel = dimension_name(*edge.dimension);
  }
  std::string key = normalize_node(edge.node1_label);
  key += kSep;
  key += rel;
  key += kSep;
  key += normalize_node(edge.node2_label);
  return key;
}

TripleSet triple_set(std::span<const Edge> edges, OverlapMode mode) {
  TripleSet set;
  for (const Edge& edge : edges) {
    if (auto key = triple_key(edge, mode)) {
      set.keys.insert(std::move(*key));
    } else {
      ++set.skipped_dimensionless;
    }
  }
  return set;
}

JaccardResult jaccard(const std::unordered_set<std::string>& a,
                      const std::unordered_set<std::string>& b) {
  const auto& small = a.size() <= b.size() ? a : b;
  const auto& large = a.size() <= b.size() ? b : a;
  JaccardResult result;
  for (const auto& key : small) {
    if (large.count(key) > 0) ++result.intersection;
  }
  result.unions = a.size() + b.size() - result.intersection;
  result.jaccard = result.unions == 0
                       ? 0.0
                       : static_cast<double>(result.intersection) /
                             static_cast<double>(result.unions);
  return result;
}

namespace {

struct SourceTriples {
  // In dimension mode the keys embed the dimension name, so the per-
  // dimension sets partition the full set and pair results sum across them.
  std::unordered_set<std::string> all;
  std::array<std::unordered_set<std::string>, kDimensionCount> by_dim;
  uint64_t skipped_dimensionless = 0;
  uint64_t edges_seen = 0;
};

template <typename NextFn>
std::vector<OverlapReport> overlap_impl(NextFn&& next,
                                        const std::vector<std::string>& sources,
                                        OverlapMode mode) {
  if (sources.size() < 2) {
    throw UsageError("overlap needs at least two sources");
  }
  std::map<std::string, SourceTriples, std::less<>> per_source;
  for (const auto& s : sources) {
    if (per_source.count(s) > 0) {
      throw UsageError("source listed twice: " + s);
    }
    per_source[s];
  }

  while (auto edge = next()) {
    const auto it = per_source.find(edge->source);
    if (it == per_source.end()) continue;
    SourceTriples& st = it->second;
    ++st.edges_seen;
    auto key = triple_key(*edge, mode);
    if (!key) {
      ++st.skipped_dimensionless;
      continue;
    }
    if (mode == OverlapMode::Dimension) {
      st.by_dim[static_cast<std::size_t>(*edge->dimension)].insert(*key);
    }
    st.all.insert(std::move(*key));
  }

  for (const auto& s : sources) {
    if (per_source.at(s).edges_seen == 0) {
      throw DataError("unknown source id: " + s + " (no edges in input)");
    }
  }

  std::vector<OverlapReport> reports;
  for (std::size_t i = 0; i < sources.size(); ++i) {
    for (std::size_t j = i + 1; j < sources.size(); ++j) {
      const SourceTriples& a = per_source.at(sources[i]);
      const SourceTriples& b = per_source.at(sources[j]);
      OverlapReport report;
      report.source_a = sources[i];
      report.source_b = sources[j];
      report.mode = mode;
      report.all = jaccard(a.all, b.all);
      report.skipped_dimensionless =
          a.skipped_dimensionless + b.skipped_dimensionless;
      if (mode == OverlapMode::Dimension) {
        for (const Dimension d : all_dimensions()) {
          const auto& da = a.by_dim[static_cast<std::size_t>(d)];
          const auto& db = b.by_dim[static_cast<std::size_t>(d)];
          if (da.empty() && db.empty()) continue;
          if (da.empty() || db.empty()) {
            report.per_dimension[d] = std::nullopt;  // the '-' cell
          } else {
            report.per_dimension[d] = jaccard(da, db);
          }
        }
      }
      reports.push_back(std::move(report));
    }
  }
  return reports;
}

}  // namespace

std::vector<OverlapReport> pairwise_overlap(std::span<const Edge> edges,
                                            const std::vector<std::string>& sources,
                                            OverlapMode mode) {
  std::size_t i = 0;
  return overlap_impl(
      [&]() -> const Edge* { return i < edges.size() ? &edges[i++] : nullptr; },
      sources, mode);
}

std::vector<OverlapReport> pairwise_overlap(EdgeReader& reader,
                                            const std::vector<std::string>& sources,
                                            OverlapMode mode) {
  return overlap_impl([&] { return reader.next(); }, sources, mode);
}

std::string render_overlap_csv(std::span<const OverlapReport> reports) {
  std::ostringstream out;
  out << "sourceA,sourceB,mode,dimension,intersection,union,jaccard\n";
  out.precision(6);
  for (const OverlapReport& r : reports) {
    const auto mode = overlap_mode_name(r.mode);
    out << r.source_a << ',' << r.source_b << ',' << mode << ",ALL,"
        << r.all.intersection << ',' << r.all.unions << ',' << r.all.jaccard
        << '\n';
    for (const auto& [dim, cell] : r.per_dimension) {
      out << r.source_a << ',' << r.source_b << ',' << mode << ','
          << dimension_name(dim) << ',';
      if (cell) {
        out << cell->intersection << ',' << cell->unions << ','
            << cell->jaccard;
      } else {
        out << ",,";
      }
      out << '\n';
    }
  }
  return out.str();
}

}  // namespace kgdim
