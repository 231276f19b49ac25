#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace kgdim {

// Edge-id -> embedding rows, sorted by id so that every seeded computation
// downstream is independent of input file order.
class VectorTable {
public:
  // Rows are `id\tv0,v1,...` or `id` followed by whitespace/tab-separated
  // floats (auto-detected). Throws DataError on inconsistent width,
  // non-finite components or duplicate ids, naming the row.
  static VectorTable load(std::istream& in);
  static VectorTable load_file(const std::string& path);

  // ids and rows must be the same length; rows are adopted as given and then
  // sorted by id.
  static VectorTable from_rows(std::vector<std::string> ids,
                               std::vector<std::vector<double>> rows);

  std::size_t size() const { return ids_.size(); }
  std::size_t width() const { return width_; }
  const std::vector<std::string>& ids() const { return ids_; }
  std::span<const double> row(std::size_t i) const {
    return {data_.data() + i * width_, width_};
  }

private:
  std::vector<std::string> ids_;
  std::vector<double> data_;  // row-major
  std::size_t width_ = 0;
};

struct KMeansOptions {
  int k = 13;
  uint64_t seed = 0;
  int max_iter = 300;
  double tol = 1e-4;  // stop when the largest centroid shift falls below
  int threads = 1;
};

struct Clustering {
  int k = 0;
  uint64_t seed = 0;
  int iterations = 0;       // assignment passes executed
  double inertia = 0.0;     // sum of squared distances to assigned centroid
  std::size_t width = 0;
  std::vector<std::string> ids;       // sorted, parallel to assignment
  std::vector<int> assignment;        // cluster index in [0, k)
  std::vector<double> centroids;      // k x width, row-major
  std::vector<double> inertia_trace;  // one entry per assignment pass

  std::span<const double> centroid(int c) const {
    return {centroids.data() + static_cast<std::size_t>(c) * width, width};
  }
};

// Lloyd iterations with k-means++ seeding. Deterministic for fixed inputs
// and seed; bit-identical for any thread count (fixed-size chunk reduction).
// Nearest-centroid ties break to the lowest cluster index; empty clusters
// are reseeded from the point farthest from its assigned centroid.
// Throws DataError when there are fewer points than clusters.
Clustering kmeans(const VectorTable& vectors, const KMeansOptions& options);

}  // namespace kgdim
