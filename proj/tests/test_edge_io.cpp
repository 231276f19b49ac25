#include <doctest.h>

#include <zlib.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "kgdim/edge_io.hpp"
#include "kgdim/enrich.hpp"
#include "kgdim/error.hpp"
#include "kgdim/io.hpp"
#include "kgdim/mapping.hpp"
#include "kgdim/rng.hpp"

using namespace kgdim;

namespace {

const char* kHeader =
    "id\tnode1\trelation\tnode2\tnode1;label\tnode2;label\trelation;label\t"
    "relation;dimension\tsource\tsentence\n";

std::vector<Edge> random_edges(uint64_t seed, std::size_t n) {
  Rng rng(seed);
  const char* sources[] = {"CN", "WN", "RG", "WD"};
  const char* relations[] = {"/r/Synonym", "/r/IsA", "/r/PartOf",
                             "at:xWant", "said to be the same as"};
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    Edge e;
    e.id = "e" + std::to_string(i);
    e.node1 = "n" + std::to_string(rng.bounded(50));
    e.relation = relations[rng.bounded(5)];
    e.node2 = "n" + std::to_string(rng.bounded(50));
    e.node1_label = "label " + std::to_string(rng.bounded(30));
    e.node2_label = rng.bounded(2) ? "x|y" : "plain";
    e.relation_label = "rel label";
    e.source = sources[rng.bounded(4)];
    e.sentence = rng.bounded(2) ? "some sentence." : "";
    if (rng.bounded(3) == 0) {
      e.dimension = static_cast<Dimension>(rng.bounded(kDimensionCount));
    }
    edges.push_back(std::move(e));
  }
  return edges;
}

}  // namespace

TEST_CASE("source filter keeps matching rows and counts the rest") {
  std::istringstream in(std::string(kHeader) +
                        "e1\ta\t/r/IsA\tb\t\t\t\t\tCN\t\n"
                        "e2\ta\t/r/IsA\tb\t\t\t\t\tWN\t\n"
                        "e3\tc\t/r/IsA\td\t\t\t\t\tCN\t\n");
  ReadOptions options;
  options.source_filter.emplace(std::unordered_set<std::string>{"CN"});
  ReadStats stats;
  const auto edges = read_edges(in, options, &stats);
  CHECK(edges.size() == 2);
  CHECK(stats.filtered == 1);
  CHECK(stats.yielded == 2);
  CHECK(edges[0].id == "e1");
  CHECK(edges[1].id == "e3");
}

TEST_CASE("a row without a dimension value yields dimension=absent") {
  std::istringstream in(
      std::string(kHeader) +
      "e1\t/c/en/food\t/r/AtLocation\t/c/en/pantry\tfood\tpantry\tat "
      "location\t\tCN\t\n");
  const auto edges = read_edges(in);
  REQUIRE(edges.size() == 1);
  CHECK_FALSE(edges[0].dimension.has_value());
  CHECK(edges[0].node1_label == "food");
  CHECK(edges[0].node2_label == "pantry");
}

TEST_CASE("missing mandatory column is a fatal header error") {
  std::istringstream in("id\tnode1\tnode2\n");
  CHECK_THROWS_WITH_AS(EdgeReader reader(in),
                       doctest::Contains("relation"), DataError);
}

TEST_CASE("wrong field count: fatal in strict mode, counted otherwise") {
  const std::string body = std::string(kHeader) +
                           "e1\ta\t/r/IsA\tb\t\t\t\t\tCN\t\n"
                           "e2\ta\t/r/IsA\n"
                           "e3\tc\t/r/IsA\td\t\t\t\t\tWN\t\n";
  {
    std::istringstream in(body);
    ReadStats stats;
    const auto edges = read_edges(in, {}, &stats);
    CHECK(edges.size() == 2);
    CHECK(stats.bad == 1);
    REQUIRE(stats.issues.size() == 1);
    CHECK(stats.issues[0].line == 3);
  }
  {
    std::istringstream in(body);
    ReadOptions options;
    options.strict = true;
    CHECK_THROWS_WITH_AS(read_edges(in, options),
                         doctest::Contains("line 3"), DataError);
  }
}

TEST_CASE("rows with an unknown dimension value are bad rows") {
  const std::string body =
      std::string(kHeader) + "e1\ta\t/r/IsA\tb\t\t\t\tbogus\tCN\t\n";
  std::istringstream in(body);
  ReadStats stats;
  const auto edges = read_edges(in, {}, &stats);
  CHECK(edges.empty());
  CHECK(stats.bad == 1);

  std::istringstream strict_in(body);
  ReadOptions options;
  options.strict = true;
  CHECK_THROWS_WITH_AS(read_edges(strict_in, options),
                       doctest::Contains("unknown dimension"), DataError);
}

TEST_CASE("labels keep multi-valued content verbatim") {
  std::istringstream in(std::string(kHeader) +
                        "e1\ta\t/r/IsA\tb\tdish|plate\tx|y|z\t\t\tCN\t\n");
  const auto edges = read_edges(in);
  REQUIRE(edges.size() == 1);
  CHECK(edges[0].node1_label == "dish|plate");
  CHECK(edges[0].node2_label == "x|y|z");
}

TEST_CASE("write/read round trip preserves every field") {
  const auto edges = random_edges(7, 200);
  std::ostringstream out;
  CHECK(write_edges(edges, out) == edges.size());
  std::istringstream in(out.str());
  const auto back = read_edges(in);
  REQUIRE(back.size() == edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    CHECK(back[i] == edges[i]);
  }
}

TEST_CASE("writing zero edges produces a header-only file") {
  std::ostringstream out;
  CHECK(write_edges({}, out) == 0);
  CHECK(out.str() == std::string(kHeader));
}

TEST_CASE("fields with control characters are write errors") {
  Edge e;
  e.id = "e1";
  e.node1 = "a";
  e.relation = "/r/IsA";
  e.node2 = "b";
  e.source = "CN";
  e.sentence = "has\ttab";
  std::ostringstream out;
  EdgeWriter writer(out);
  CHECK_THROWS_WITH_AS(writer.write(e),
                       doctest::Contains("illegal control character"),
                       DataError);
}

TEST_CASE("assign_dimensions: mapped, excluded and unmapped paths") {
  std::vector<Edge> edges(3);
  edges[0].id = "e1";
  edges[0].relation = "/r/Synonym";
  edges[0].source = "CN";
  edges[1].id = "e2";
  edges[1].relation = "/r/dbpedia/field";
  edges[1].source = "CN";
  edges[2].id = "e3";
  edges[2].relation = "/r/UnknownRel";
  edges[2].source = "CN";

  EnrichStats stats;
  const auto out = assign_dimensions(edges, default_mapping(), &stats);
  REQUIRE(out.size() == 2);
  CHECK(out[0].dimension == Dimension::Similarity);
  CHECK_FALSE(out[1].dimension.has_value());
  CHECK(stats.mapped == 1);
  CHECK(stats.excluded == 1);
  CHECK(stats.unmapped.at("/r/UnknownRel") == 1);
  CHECK(stats.mapped + stats.excluded + stats.unmapped_total() == stats.input);
}

TEST_CASE("assign_dimensions is idempotent") {
  auto edges = random_edges(11, 150);
  EnrichStats first_stats;
  const auto once = assign_dimensions(edges, default_mapping(), &first_stats);
  const auto twice = assign_dimensions(once, default_mapping());
  REQUIRE(once.size() == twice.size());
  for (std::size_t i = 0; i < once.size(); ++i) {
    CHECK(once[i] == twice[i]);
  }
}

TEST_CASE("reader accounting: rows == yielded + filtered + bad") {
  std::istringstream in(std::string(kHeader) +
                        "e1\ta\t/r/IsA\tb\t\t\t\t\tCN\t\n"
                        "e2\ta\t/r/IsA\n"
                        "e3\tc\t/r/IsA\td\t\t\t\t\tWN\t\n"
                        "e4\tc\t/r/IsA\td\t\t\t\t\tRG\t\n");
  ReadOptions options;
  options.source_filter.emplace(std::unordered_set<std::string>{"CN", "WN"});
  EdgeReader reader(in, options);
  while (reader.next()) {
  }
  const ReadStats& s = reader.stats();
  CHECK(s.rows == 4);
  CHECK(s.yielded == 2);
  CHECK(s.filtered == 1);
  CHECK(s.bad == 1);
  CHECK(s.rows == s.yielded + s.filtered + s.bad);
}

TEST_CASE("random garbage never crashes the reader") {
  Rng rng(2027);
  for (int trial = 0; trial < 50; ++trial) {
    std::string blob = std::string(kHeader);
    const std::size_t len = rng.bounded(400);
    for (std::size_t i = 0; i < len; ++i) {
      static const char alphabet[] = "ab\t\t\n\n|;/.:x ";
      blob.push_back(alphabet[rng.bounded(sizeof(alphabet) - 1)]);
    }
    std::istringstream in(blob);
    try {
      ReadStats stats;
      const auto edges = read_edges(in, {}, &stats);
      CHECK(stats.rows == edges.size() + stats.filtered + stats.bad);
    } catch (const DataError&) {
      // acceptable outcome for malformed input
    }
  }
}

TEST_CASE("gzip input inflates transparently") {
  const std::string path = "/tmp/kgdim_gz_test.tsv.gz";
  // Content larger than one streambuf block to exercise refills.
  std::vector<Edge> edges;
  for (int i = 0; i < 4000; ++i) {
    Edge e;
    e.id = "gz" + std::to_string(i);
    e.node1 = "n" + std::to_string(i);
    e.relation = "/r/IsA";
    e.node2 = "m" + std::to_string(i);
    e.node1_label = "some fairly long label text to fatten the file " +
                    std::to_string(i);
    e.source = "CN";
    edges.push_back(std::move(e));
  }
  std::ostringstream plain;
  write_edges(edges, plain);
  gzFile gz = gzopen(path.c_str(), "wb");
  REQUIRE(gz != nullptr);
  const std::string& body = plain.str();
  REQUIRE(gzwrite(gz, body.data(), static_cast<unsigned>(body.size())) ==
          static_cast<int>(body.size()));
  gzclose(gz);

  auto in = open_input(path);
  const auto back = read_edges(*in);
  REQUIRE(back.size() == edges.size());
  CHECK(back.front() == edges.front());
  CHECK(back.back() == edges.back());
  std::remove(path.c_str());
}

TEST_CASE("a corrupt gzip stream surfaces as an error, not a short read") {
  const std::string path = "/tmp/kgdim_gz_corrupt.tsv.gz";
  std::vector<Edge> edges;
  for (int i = 0; i < 5000; ++i) {
    Edge e;
    e.id = "gz" + std::to_string(i);
    e.node1 = "n";
    e.relation = "/r/IsA";
    e.node2 = "m";
    e.source = "CN";
    e.sentence = "padding padding padding padding " + std::to_string(i);
    edges.push_back(std::move(e));
  }
  std::ostringstream plain;
  write_edges(edges, plain);
  gzFile gz = gzopen(path.c_str(), "wb");
  REQUIRE(gz != nullptr);
  const std::string& body = plain.str();
  REQUIRE(gzwrite(gz, body.data(), static_cast<unsigned>(body.size())) ==
          static_cast<int>(body.size()));
  gzclose(gz);

  // Flip bytes in the middle of the compressed payload.
  {
    std::fstream f(path, std::ios::in | std::ios::out | std::ios::binary);
    f.seekg(0, std::ios::end);
    const auto size = static_cast<long>(f.tellg());
    REQUIRE(size > 4000);
    f.seekp(size / 2);
    const char junk[64] = {};
    f.write(junk, sizeof(junk));
  }

  auto in = open_input(path);
  CHECK_THROWS(read_edges(*in));
  std::remove(path.c_str());
}

TEST_CASE("enrich stats merge by addition") {
  const auto edges = random_edges(3, 100);
  EnrichStats whole;
  assign_dimensions(edges, default_mapping(), &whole);

  std::vector<Edge> lo(edges.begin(), edges.begin() + 40);
  std::vector<Edge> hi(edges.begin() + 40, edges.end());
  EnrichStats a;
  EnrichStats b;
  assign_dimensions(lo, default_mapping(), &a);
  assign_dimensions(hi, default_mapping(), &b);
  a.merge(b);
  CHECK(a.input == whole.input);
  CHECK(a.mapped == whole.mapped);
  CHECK(a.excluded == whole.excluded);
  CHECK(a.unmapped == whole.unmapped);
}
