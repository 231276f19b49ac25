#include "kgdim/clustering.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <numeric>
#include <thread>

#include "kgdim/error.hpp"
#include "kgdim/rng.hpp"
#include "kgdim/text.hpp"

namespace kgdim {

namespace {

double parse_component(std::string_view token, uint64_t lineno) {
  double value = 0.0;
  const auto* begin = token.data();
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) {
    throw DataError("vector file row " + std::to_string(lineno) +
                    ": cannot parse component '" + std::string(token) + "'");
  }
  if (!std::isfinite(value)) {
    throw DataError("vector file row " + std::to_string(lineno) +
                    ": non-finite component '" + std::string(token) + "'");
  }
  return value;
}

void split_on(std::string_view s, char sep, std::vector<std::string_view>& out) {
  out.clear();
  std::size_t start = 0;
  while (start <= s.size()) {
    const auto pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      if (start < s.size()) out.push_back(s.substr(start));
      break;
    }
    if (pos > start) out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

// Fixed-size chunks processed by up to `threads` workers, partial results
// merged in chunk order. Chunking does not depend on the worker count, so
// floating-point reductions are bit-identical for any `threads`.
constexpr std::size_t kChunk = 4096;

template <typename ChunkFn>
void for_each_chunk(std::size_t n, int threads, ChunkFn&& fn) {
  const std::size_t n_chunks = (n + kChunk - 1) / kChunk;
  if (threads <= 1 || n_chunks <= 1) {
    for (std::size_t c = 0; c < n_chunks; ++c) {
      fn(c, c * kChunk, std::min(n, (c + 1) * kChunk));
    }
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (true) {
      const std::size_t c = next.fetch_add(1);
      if (c >= n_chunks) break;
      fn(c, c * kChunk, std::min(n, (c + 1) * kChunk));
    }
  };
  std::vector<std::thread> pool;
  const int n_workers = std::min<int>(threads, static_cast<int>(n_chunks));
  pool.reserve(static_cast<std::size_t>(n_workers));
  for (int t = 0; t < n_workers; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

double sq_distance(std::span<const double> a, std::span<const double> b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double diff = a[i] - b[i];
    d += diff * diff;
  }
  return d;
}

}  // namespace

VectorTable VectorTable::load(std::istream& in) {
  std::vector<std::string> ids;
  std::vector<std::vector<double>> rows;
  std::string line;
  uint64_t lineno = 0;
  std::vector<std::string_view> tokens;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = split_tabs(line);
    if (fields.size() < 2 || fields[0].empty()) {
      throw DataError("vector file row " + std::to_string(lineno) +
                      ": expected `id` followed by components");
    }
    std::vector<double> row;
    if (fields.size() == 2 &&
        fields[1].find(',') != std::string_view::npos) {
      split_on(fields[1], ',', tokens);
      for (const auto t : tokens) row.push_back(parse_component(t, lineno));
    } else if (fields.size() == 2 &&
               fields[1].find(' ') != std::string_view::npos) {
      split_on(fields[1], ' ', tokens);
      for (const auto t : tokens) row.push_back(parse_component(t, lineno));
    } else {
      for (std::size_t i = 1; i < fields.size(); ++i) {
        row.push_back(parse_component(fields[i], lineno));
      }
    }
    if (row.empty()) {
      throw DataError("vector file row " + std::to_string(lineno) +
                      ": empty vector");
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw DataError("inconsistent vector width at row " +
                      std::to_string(lineno) + " (got " +
                      std::to_string(row.size()) + ", expected " +
                      std::to_string(rows.front().size()) + ")");
    }
    ids.push_back(std::string(fields[0]));
    rows.push_back(std::move(row));
  }
  return from_rows(std::move(ids), std::move(rows));
}

VectorTable VectorTable::load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open vector file: " + path);
  return load(in);
}

VectorTable VectorTable::from_rows(std::vector<std::string> ids,
                                   std::vector<std::vector<double>> rows) {
  if (ids.size() != rows.size()) {
    throw DataError("vector table: ids and rows differ in length");
  }
  VectorTable table;
  table.width_ = rows.empty() ? 0 : rows.front().size();
  for (const auto& row : rows) {
    if (row.size() != table.width_) {
      throw DataError("vector table: inconsistent row width");
    }
  }
  std::vector<std::size_t> order(ids.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return ids[a] < ids[b]; });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (ids[order[i]] == ids[order[i - 1]]) {
      throw DataError("duplicate vector id: " + ids[order[i]]);
    }
  }
  table.ids_.reserve(ids.size());
  table.data_.reserve(ids.size() * table.width_);
  for (const std::size_t idx : order) {
    table.ids_.push_back(std::move(ids[idx]));
    table.data_.insert(table.data_.end(), rows[idx].begin(), rows[idx].end());
  }
  return table;
}

namespace {

std::vector<double> kmeanspp_seed(const VectorTable& vectors, int k, Rng& rng) {
  const std::size_t n = vectors.size();
  const std::size_t width = vectors.width();
  std::vector<double> centroids;
  centroids.reserve(static_cast<std::size_t>(k) * width);

  auto push_point = [&](std::size_t i) {
    const auto row = vectors.row(i);
    centroids.insert(centroids.end(), row.begin(), row.end());
  };

  push_point(rng.bounded(n));
  std::vector<double> d2(n, std::numeric_limits<double>::infinity());
  for (int c = 1; c < k; ++c) {
    const std::span<const double> last{
        centroids.data() + static_cast<std::size_t>(c - 1) * width, width};
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      d2[i] = std::min(d2[i], sq_distance(vectors.row(i), last));
      total += d2[i];
    }
    if (total <= 0.0) {
      push_point(rng.bounded(n));  // all remaining points coincide
      continue;
    }
    const double r = rng.unit() * total;
    double cum = 0.0;
    std::size_t chosen = n - 1;
    for (std::size_t i = 0; i < n; ++i) {
      cum += d2[i];
      if (cum > r) {
        chosen = i;
        break;
      }
    }
    push_point(chosen);
  }
  return centroids;
}

}  // namespace

Clustering kmeans(const VectorTable& vectors, const KMeansOptions& options) {
  const std::size_t n = vectors.size();
  const std::size_t width = vectors.width();
  const int k = options.k;
  if (k <= 0) throw UsageError("k must be positive");
  if (n < static_cast<std::size_t>(k)) {
    throw DataError("k-means needs at least k=" + std::to_string(k) +
                    " points, got " + std::to_string(n));
  }

  Clustering result;
  result.k = k;
  result.seed = options.seed;
  result.width = width;
  result.ids = vectors.ids();
  result.assignment.assign(n, 0);

  Rng rng(options.seed);
  std::vector<double> centroids = kmeanspp_seed(vectors, k, rng);
  std::vector<double> point_d2(n, 0.0);

  auto centroid = [&](const std::vector<double>& cs, int c) {
    return std::span<const double>{
        cs.data() + static_cast<std::size_t>(c) * width, width};
  };

  auto assign_pass = [&] {
    for_each_chunk(n, options.threads, [&](std::size_t, std::size_t lo,
                                           std::size_t hi) {
      for (std::size_t i = lo; i < hi; ++i) {
        const auto row = vectors.row(i);
        double best = std::numeric_limits<double>::infinity();
        int best_c = 0;
        for (int c = 0; c < k; ++c) {
          const double d = sq_distance(row, centroid(centroids, c));
          if (d < best) {
            best = d;
            best_c = c;
          }
        }
        result.assignment[i] = best_c;
        point_d2[i] = best;
      }
    });
    // Summed in index order for a thread-count-independent result.
    double inertia = 0.0;
    for (std::size_t i = 0; i < n; ++i) inertia += point_d2[i];
    return inertia;
  };

  // The update pass is k times cheaper than assignment, so it runs
  // sequentially in point-index order; that makes the floating-point
  // reduction independent of the thread count by construction.
  auto update_pass = [&] {
    std::vector<double> sums(static_cast<std::size_t>(k) * width, 0.0);
    std::vector<uint64_t> counts(static_cast<std::size_t>(k), 0);
    for (std::size_t i = 0; i < n; ++i) {
      const int c = result.assignment[i];
      const auto row = vectors.row(i);
      double* dst = sums.data() + static_cast<std::size_t>(c) * width;
      for (std::size_t j = 0; j < width; ++j) dst[j] += row[j];
      ++counts[static_cast<std::size_t>(c)];
    }

    std::vector<double> next(centroids.size());
    std::vector<int> empty;
    for (int c = 0; c < k; ++c) {
      const uint64_t cnt = counts[static_cast<std::size_t>(c)];
      double* dst = next.data() + static_cast<std::size_t>(c) * width;
      if (cnt == 0) {
        empty.push_back(c);
        continue;
      }
      const double* src = sums.data() + static_cast<std::size_t>(c) * width;
      for (std::size_t j = 0; j < width; ++j) {
        dst[j] = src[j] / static_cast<double>(cnt);
      }
    }
    // Empty-cluster repair: reseed from the point farthest from its
    // centroid; ties break to the lowest point index.
    std::vector<char> taken(n, 0);
    for (const int c : empty) {
      std::size_t far_i = 0;
      double far_d = -1.0;
      for (std::size_t i = 0; i < n; ++i) {
        if (taken[i]) continue;
        if (point_d2[i] > far_d) {
          far_d = point_d2[i];
          far_i = i;
        }
      }
      taken[far_i] = 1;
      const auto row = vectors.row(far_i);
      double* dst = next.data() + static_cast<std::size_t>(c) * width;
      std::copy(row.begin(), row.end(), dst);
    }
    double max_shift = 0.0;
    for (int c = 0; c < k; ++c) {
      max_shift = std::max(
          max_shift, std::sqrt(sq_distance(centroid(centroids, c),
                                           centroid(next, c))));
    }
    centroids = std::move(next);
    return max_shift;
  };

  // iterations counts assign+update cycles; one extra assignment at the end
  // aligns the reported assignment and inertia with the final centroids.
  for (int iter = 0; iter < options.max_iter; ++iter) {
    result.inertia_trace.push_back(assign_pass());
    const double shift = update_pass();
    ++result.iterations;
    if (shift < options.tol) break;
  }
  result.inertia_trace.push_back(assign_pass());
  result.inertia = result.inertia_trace.back();
  result.centroids = std::move(centroids);
  return result;
}

}  // namespace kgdim
