#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "kgdim/clustering.hpp"
#include "kgdim/edge.hpp"

namespace kgdim {

// Identity projection of the per-edge dimension field; dimensionless edges
// are excluded and counted.
struct DimensionPartition {
  std::map<std::string, Dimension> by_id;
  uint64_t excluded = 0;
};

DimensionPartition dimension_partition(std::span<const Edge> edges);

// Chance-adjusted pair-counting agreement between two partitions of the
// same ids. Returns 1 for identical partitions in the degenerate case where
// MaxIndex == ExpectedIndex, 0 for the other degenerate cases. Throws
// DataError when the id sets differ.
double adjusted_rand_index(const std::map<std::string, int>& a,
                           const std::map<std::string, int>& b);
double adjusted_rand_index(const std::map<std::string, int>& a,
                           const std::map<std::string, Dimension>& b);

struct PairScore {
  int cluster = 0;
  Dimension dimension = Dimension::Lexical;
  uint64_t intersection = 0;
  uint64_t unions = 0;
  double jaccard = 0.0;
};

struct AgreementReport {
  double ari = 0.0;
  // All (cluster, dimension) pairs with a non-empty union, sorted by
  // descending Jaccard (ties: cluster, then dimension order).
  std::vector<PairScore> pairs;
  // Up to 3 best dimensions per cluster, one row per cluster.
  std::vector<std::vector<PairScore>> top3_by_cluster;
};

// Jaccard between each k-means cluster and each dimension class:
// |c ∩ d| / |c ∪ d| over edge ids. Ids of the clustering and the partition
// must coincide.
AgreementReport cluster_dimension_jaccard(const Clustering& clustering,
                                          const DimensionPartition& dims);

struct ClusterProfile {
  uint64_t size = 0;
  std::array<uint64_t, kDimensionCount> dimension_histogram{};
  uint64_t dimensionless = 0;
  // Most frequent node identifiers, both endpoints counted; descending
  // count, ties lexicographic.
  std::vector<std::pair<std::string, uint64_t>> top_nodes;
};

// Per-cluster dimension histogram and node frequencies. Every edge id in
// `edges` must be present in the clustering.
std::vector<ClusterProfile> cluster_profile(const Clustering& clustering,
                                            std::span<const Edge> edges,
                                            std::size_t top_n = 10);

}  // namespace kgdim
