#include <doctest.h>

#include <map>
#include <string>
#include <vector>

#include "kgdim/agreement.hpp"
#include "kgdim/error.hpp"
#include "kgdim/rng.hpp"

using namespace kgdim;

namespace {

std::map<std::string, int> partition(const std::vector<int>& labels) {
  std::map<std::string, int> p;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    p[std::string("id") + (i < 10 ? "0" : "") + std::to_string(i)] = labels[i];
  }
  return p;
}

// Independent ARI: count pair agreements directly over all id pairs and use
// the 2x2 pair-confusion form 2(ad - bc) / ((a+b)(b+d) + (a+c)(c+d)).
double brute_force_ari(const std::map<std::string, int>& pa,
                       const std::map<std::string, int>& pb) {
  std::vector<int> a, b;
  for (const auto& [id, label] : pa) a.push_back(label);
  for (const auto& [id, label] : pb) b.push_back(label);
  double n11 = 0, n10 = 0, n01 = 0, n00 = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      const bool same_a = a[i] == a[j];
      const bool same_b = b[i] == b[j];
      if (same_a && same_b) ++n11;
      else if (same_a) ++n10;
      else if (same_b) ++n01;
      else ++n00;
    }
  }
  const double denom = (n11 + n10) * (n10 + n00) + (n11 + n01) * (n01 + n00);
  if (denom == 0.0) return 1.0;  // both partitions trivial and identical
  return 2.0 * (n11 * n00 - n10 * n01) / denom;
}

}  // namespace

TEST_CASE("identical partitions score 1") {
  const auto p = partition({0, 0, 1, 2, 2, 1, 0});
  CHECK(adjusted_rand_index(p, p) == 1.0);
  // ... under any relabeling
  const auto q = partition({5, 5, 9, 7, 7, 9, 5});
  CHECK(adjusted_rand_index(p, q) == 1.0);
}

TEST_CASE("single cluster against a finer partition scores 0") {
  const auto one = partition({0, 0, 0, 0, 0, 0});
  const auto finer = partition({0, 0, 1, 1, 2, 2});
  CHECK(adjusted_rand_index(one, finer) == 0.0);
  CHECK(adjusted_rand_index(finer, one) == 0.0);
}

TEST_CASE("degenerate trivial partitions") {
  const auto singletons = partition({0, 1, 2, 3});
  CHECK(adjusted_rand_index(singletons, singletons) == 1.0);
  const auto one = partition({0, 0, 0, 0});
  CHECK(adjusted_rand_index(one, one) == 1.0);
  CHECK(adjusted_rand_index(singletons, one) == 0.0);
}

TEST_CASE("the four-point case equals 4/7 (checked by brute force first)") {
  const auto pa = partition({0, 0, 1, 1});
  const auto pb = partition({0, 0, 1, 2});
  const double oracle = brute_force_ari(pa, pb);
  CHECK(oracle == doctest::Approx(4.0 / 7.0).epsilon(1e-12));
  CHECK(adjusted_rand_index(pa, pb) == doctest::Approx(oracle).epsilon(1e-12));
  CHECK(adjusted_rand_index(pa, pb) ==
        doctest::Approx(0.5714).epsilon(1e-4));
}

TEST_CASE("ARI matches brute force on random partitions") {
  Rng rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 4 + rng.bounded(20);
    std::vector<int> la(n), lb(n);
    for (auto& x : la) x = static_cast<int>(rng.bounded(4));
    for (auto& x : lb) x = static_cast<int>(rng.bounded(4));
    const auto pa = partition(la);
    const auto pb = partition(lb);
    const double expected = brute_force_ari(pa, pb);
    CHECK(adjusted_rand_index(pa, pb) ==
          doctest::Approx(expected).epsilon(1e-9));
  }
}

TEST_CASE("ARI is symmetric and invariant under relabeling") {
  Rng rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 5 + rng.bounded(30);
    std::vector<int> la(n), lb(n);
    for (auto& x : la) x = static_cast<int>(rng.bounded(5));
    for (auto& x : lb) x = static_cast<int>(rng.bounded(5));
    const auto pa = partition(la);
    const auto pb = partition(lb);
    const double base = adjusted_rand_index(pa, pb);
    CHECK(adjusted_rand_index(pb, pa) == base);

    // random permutation of label names in pa
    int perm[5] = {0, 1, 2, 3, 4};
    for (int i = 4; i > 0; --i) {
      std::swap(perm[i], perm[rng.bounded(static_cast<uint64_t>(i) + 1)]);
    }
    std::vector<int> relabeled(n);
    for (std::size_t i = 0; i < n; ++i) relabeled[i] = perm[la[i]] + 100;
    CHECK(adjusted_rand_index(partition(relabeled), pb) ==
          doctest::Approx(base).epsilon(1e-12));
  }
}

TEST_CASE("mismatched id sets are an error") {
  std::map<std::string, int> pa = {{"x", 0}, {"y", 0}};
  std::map<std::string, int> pb = {{"x", 0}, {"z", 0}};
  CHECK_THROWS_AS(adjusted_rand_index(pa, pb), DataError);
  std::map<std::string, int> shorter = {{"x", 0}};
  CHECK_THROWS_AS(adjusted_rand_index(pa, shorter), DataError);
}

namespace {

Edge dim_edge(const std::string& id, std::optional<Dimension> d,
              const std::string& n1 = "a", const std::string& n2 = "b") {
  Edge e;
  e.id = id;
  e.node1 = n1;
  e.relation = "/r/IsA";
  e.node2 = n2;
  e.source = "CN";
  e.dimension = d;
  return e;
}

Clustering tiny_clustering(const std::vector<std::string>& ids,
                           const std::vector<int>& assignment, int k) {
  Clustering c;
  c.k = k;
  c.ids = ids;
  c.assignment = assignment;
  c.width = 0;
  return c;
}

}  // namespace

TEST_CASE("dimension_partition projects and counts the dimensionless") {
  const std::vector<Edge> edges = {
      dim_edge("e1", Dimension::Similarity),
      dim_edge("e2", Dimension::Taxonomic),
      dim_edge("e3", std::nullopt),
  };
  const auto part = dimension_partition(edges);
  CHECK(part.by_id.size() == 2);
  CHECK(part.excluded == 1);
  CHECK(part.by_id.at("e1") == Dimension::Similarity);
}

TEST_CASE("cluster/dimension jaccard: exact correspondence scores 1") {
  DimensionPartition dims;
  dims.by_id = {{"e1", Dimension::Distinctness},
                {"e2", Dimension::Distinctness},
                {"e3", Dimension::Similarity}};
  const auto c = tiny_clustering({"e1", "e2", "e3"}, {0, 0, 1}, 2);
  const auto report = cluster_dimension_jaccard(c, dims);
  REQUIRE(!report.pairs.empty());
  CHECK(report.pairs[0].jaccard == 1.0);
  CHECK(report.ari == 1.0);
}

TEST_CASE("cluster/dimension jaccard: 2 of 6 is one third") {
  // cluster 0 holds 3 edges; dimension Quality has 5 edges; overlap 2.
  DimensionPartition dims;
  dims.by_id = {{"e1", Dimension::Quality},  {"e2", Dimension::Quality},
                {"e3", Dimension::Lexical},  {"e4", Dimension::Quality},
                {"e5", Dimension::Quality},  {"e6", Dimension::Quality}};
  const auto c =
      tiny_clustering({"e1", "e2", "e3", "e4", "e5", "e6"},
                      {0, 0, 0, 1, 1, 1}, 2);
  const auto report = cluster_dimension_jaccard(c, dims);
  bool found = false;
  for (const auto& p : report.pairs) {
    if (p.cluster == 0 && p.dimension == Dimension::Quality) {
      CHECK(p.intersection == 2);
      CHECK(p.unions == 6);
      CHECK(p.jaccard == doctest::Approx(1.0 / 3.0));
      found = true;
    }
  }
  CHECK(found);
}

TEST_CASE("pair jaccard intersections sum to the dimension size") {
  Rng rng(3);
  DimensionPartition dims;
  std::vector<std::string> ids;
  std::vector<int> assignment;
  for (int i = 0; i < 100; ++i) {
    const std::string id = "e" + std::to_string(i);
    ids.push_back(id);
    assignment.push_back(static_cast<int>(rng.bounded(4)));
    dims.by_id[id] = static_cast<Dimension>(rng.bounded(kDimensionCount));
  }
  const auto c = tiny_clustering(ids, assignment, 4);
  const auto report = cluster_dimension_jaccard(c, dims);
  for (const Dimension d : all_dimensions()) {
    uint64_t dim_size = 0;
    for (const auto& [id, dd] : dims.by_id) dim_size += dd == d ? 1 : 0;
    uint64_t sum = 0;
    for (const auto& p : report.pairs) {
      if (p.dimension == d) sum += p.intersection;
    }
    CHECK(sum == dim_size);
    for (const auto& p : report.pairs) {
      CHECK(p.jaccard >= 0.0);
      CHECK(p.jaccard <= 1.0);
    }
  }
  // top3 rows have at most 3 entries, sorted descending
  for (const auto& row : report.top3_by_cluster) {
    CHECK(row.size() <= 3);
    for (std::size_t i = 1; i < row.size(); ++i) {
      CHECK(row[i - 1].jaccard >= row[i].jaccard);
    }
  }
}

TEST_CASE("agreement requires matching id sets") {
  DimensionPartition dims;
  dims.by_id = {{"e1", Dimension::Quality}};
  const auto c = tiny_clustering({"e1", "e2"}, {0, 1}, 2);
  CHECK_THROWS_AS(cluster_dimension_jaccard(c, dims), DataError);
}

TEST_CASE("cluster profile: node degrees and histogram totals") {
  const std::vector<Edge> edges = {
      dim_edge("e1", Dimension::Similarity, "a", "b"),
      dim_edge("e2", Dimension::Similarity, "a", "c"),
  };
  const auto c = tiny_clustering({"e1", "e2"}, {0, 0}, 1);
  const auto profiles = cluster_profile(c, edges, 3);
  REQUIRE(profiles.size() == 1);
  CHECK(profiles[0].size == 2);
  REQUIRE(!profiles[0].top_nodes.empty());
  CHECK(profiles[0].top_nodes[0].first == "a");
  CHECK(profiles[0].top_nodes[0].second == 2);
  uint64_t total = profiles[0].dimensionless;
  for (const auto n : profiles[0].dimension_histogram) total += n;
  CHECK(total == profiles[0].size);
}

TEST_CASE("a 360-of-390 distinctness cluster reports a 92% share") {
  std::vector<Edge> edges;
  std::vector<std::string> ids;
  std::vector<int> assignment;
  for (int i = 0; i < 390; ++i) {
    const std::string id = "e" + std::to_string(i);
    edges.push_back(dim_edge(id, i < 360 ? Dimension::Distinctness
                                         : Dimension::Lexical,
                             "n" + std::to_string(i), "m"));
    ids.push_back(id);
    assignment.push_back(0);
  }
  const auto c = tiny_clustering(ids, assignment, 1);
  const auto profiles = cluster_profile(c, edges);
  REQUIRE(profiles.size() == 1);
  const double share =
      static_cast<double>(
          profiles[0].dimension_histogram[static_cast<std::size_t>(
              Dimension::Distinctness)]) /
      static_cast<double>(profiles[0].size);
  CHECK(share == doctest::Approx(360.0 / 390.0).epsilon(1e-12));
  CHECK(share == doctest::Approx(0.92).epsilon(0.01));
}
