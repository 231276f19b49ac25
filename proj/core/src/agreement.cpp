#include "kgdim/agreement.hpp"

#include <algorithm>
#include <unordered_map>

#include "kgdim/error.hpp"

namespace kgdim {

DimensionPartition dimension_partition(std::span<const Edge> edges) {
  DimensionPartition part;
  for (const Edge& edge : edges) {
    if (edge.dimension) {
      part.by_id[edge.id] = *edge.dimension;
    } else {
      ++part.excluded;
    }
  }
  return part;
}

namespace {

uint64_t pairs2(uint64_t n) { return n * (n - 1) / 2; }

// Canonical relabeling by first occurrence over the (sorted) id order;
// equal canonical vectors <=> identical set partitions.
std::vector<int> canonical_labels(const std::map<std::string, int>& p) {
  std::vector<int> out;
  out.reserve(p.size());
  std::unordered_map<int, int> relabel;
  for (const auto& [id, label] : p) {
    const auto [it, inserted] =
        relabel.emplace(label, static_cast<int>(relabel.size()));
    out.push_back(it->second);
  }
  return out;
}

double ari_impl(const std::map<std::string, int>& a,
                const std::map<std::string, int>& b) {
  if (a.size() != b.size()) {
    throw DataError("adjusted_rand_index: partitions differ in size (" +
                    std::to_string(a.size()) + " vs " +
                    std::to_string(b.size()) + ")");
  }
  std::unordered_map<int, uint64_t> count_a;
  std::unordered_map<int, uint64_t> count_b;
  std::map<std::pair<int, int>, uint64_t> contingency;
  auto ita = a.begin();
  auto itb = b.begin();
  for (; ita != a.end(); ++ita, ++itb) {
    if (ita->first != itb->first) {
      throw DataError("adjusted_rand_index: id sets differ ('" + ita->first +
                      "' vs '" + itb->first + "')");
    }
    ++count_a[ita->second];
    ++count_b[itb->second];
    ++contingency[{ita->second, itb->second}];
  }

  const uint64_t n = a.size();
  uint64_t index = 0;
  for (const auto& [cell, cnt] : contingency) index += pairs2(cnt);
  uint64_t sum_a = 0;
  for (const auto& [label, cnt] : count_a) sum_a += pairs2(cnt);
  uint64_t sum_b = 0;
  for (const auto& [label, cnt] : count_b) sum_b += pairs2(cnt);

  const long double total_pairs = static_cast<long double>(pairs2(n));
  if (total_pairs == 0) {
    return 1.0;  // zero or one element: identical by construction
  }
  const long double expected =
      static_cast<long double>(sum_a) * static_cast<long double>(sum_b) /
      total_pairs;
  const long double max_index =
      (static_cast<long double>(sum_a) + static_cast<long double>(sum_b)) / 2.0L;
  if (max_index == expected) {
    // Degenerate: both partitions trivial (all singletons or one block).
    return canonical_labels(a) == canonical_labels(b) ? 1.0 : 0.0;
  }
  return static_cast<double>(
      (static_cast<long double>(index) - expected) / (max_index - expected));
}

}  // namespace

double adjusted_rand_index(const std::map<std::string, int>& a,
                           const std::map<std::string, int>& b) {
  return ari_impl(a, b);
}

double adjusted_rand_index(const std::map<std::string, int>& a,
                           const std::map<std::string, Dimension>& b) {
  std::map<std::string, int> bi;
  for (const auto& [id, dim] : b) {
    bi.emplace_hint(bi.end(), id, static_cast<int>(dim));
  }
  return ari_impl(a, bi);
}

AgreementReport cluster_dimension_jaccard(const Clustering& clustering,
                                          const DimensionPartition& dims) {
  if (clustering.ids.size() != dims.by_id.size()) {
    throw DataError("agreement: clustering has " +
                    std::to_string(clustering.ids.size()) +
                    " ids but the dimension partition has " +
                    std::to_string(dims.by_id.size()));
  }

  const int k = clustering.k;
  std::vector<uint64_t> cluster_size(static_cast<std::size_t>(k), 0);
  std::array<uint64_t, kDimensionCount> dim_size{};
  std::vector<std::array<uint64_t, kDimensionCount>> inter(
      static_cast<std::size_t>(k));
  for (auto& row : inter) row.fill(0);

  std::map<std::string, int> cluster_by_id;
  for (std::size_t i = 0; i < clustering.ids.size(); ++i) {
    const std::string& id = clustering.ids[i];
    const auto it = dims.by_id.find(id);
    if (it == dims.by_id.end()) {
      throw DataError("agreement: id '" + id +
                      "' is clustered but has no dimension");
    }
    const int c = clustering.assignment[i];
    const auto d = static_cast<std::size_t>(it->second);
    ++cluster_size[static_cast<std::size_t>(c)];
    ++dim_size[d];
    ++inter[static_cast<std::size_t>(c)][d];
    cluster_by_id.emplace(id, c);
  }

  AgreementReport report;
  report.ari = adjusted_rand_index(cluster_by_id, dims.by_id);
  for (int c = 0; c < k; ++c) {
    for (const Dimension d : all_dimensions()) {
      const auto di = static_cast<std::size_t>(d);
      const uint64_t i2 = inter[static_cast<std::size_t>(c)][di];
      const uint64_t u =
          cluster_size[static_cast<std::size_t>(c)] + dim_size[di] - i2;
      if (u == 0) continue;
      PairScore score;
      score.cluster = c;
      score.dimension = d;
      score.intersection = i2;
      score.unions = u;
      score.jaccard = static_cast<double>(i2) / static_cast<double>(u);
      report.pairs.push_back(score);
    }
  }
  std::stable_sort(report.pairs.begin(), report.pairs.end(),
                   [](const PairScore& x, const PairScore& y) {
                     return x.jaccard > y.jaccard;
                   });

  report.top3_by_cluster.resize(static_cast<std::size_t>(k));
  for (const PairScore& score : report.pairs) {
    auto& row = report.top3_by_cluster[static_cast<std::size_t>(score.cluster)];
    if (row.size() < 3) row.push_back(score);
  }
  return report;
}

std::vector<ClusterProfile> cluster_profile(const Clustering& clustering,
                                            std::span<const Edge> edges,
                                            std::size_t top_n) {
  std::unordered_map<std::string_view, int> cluster_by_id;
  cluster_by_id.reserve(clustering.ids.size());
  for (std::size_t i = 0; i < clustering.ids.size(); ++i) {
    cluster_by_id.emplace(clustering.ids[i], clustering.assignment[i]);
  }

  const auto k = static_cast<std::size_t>(clustering.k);
  std::vector<ClusterProfile> profiles(k);
  std::vector<std::map<std::string, uint64_t>> node_counts(k);
  for (const Edge& edge : edges) {
    const auto it = cluster_by_id.find(edge.id);
    if (it == cluster_by_id.end()) {
      throw DataError("cluster_profile: edge '" + edge.id +
                      "' is not in the clustering");
    }
    const auto c = static_cast<std::size_t>(it->second);
    ++profiles[c].size;
    if (edge.dimension) {
      ++profiles[c].dimension_histogram[static_cast<std::size_t>(*edge.dimension)];
    } else {
      ++profiles[c].dimensionless;
    }
    ++node_counts[c][edge.node1];
    ++node_counts[c][edge.node2];
  }

  for (std::size_t c = 0; c < k; ++c) {
    std::vector<std::pair<std::string, uint64_t>> nodes(node_counts[c].begin(),
                                                        node_counts[c].end());
    // Descending count; the map already yields lexicographic order for ties.
    std::stable_sort(nodes.begin(), nodes.end(),
                     [](const auto& x, const auto& y) {
                       return x.second > y.second;
                     });
    if (nodes.size() > top_n) nodes.resize(top_n);
    profiles[c].top_nodes = std::move(nodes);
  }
  return profiles;
}

}  // namespace kgdim
