#include <doctest.h>

#include <sstream>

#include "kgdim/error.hpp"
#include "kgdim/mapping.hpp"

using namespace kgdim;

TEST_CASE("default mapping resolves the canonical examples") {
  const MappingTable& table = default_mapping();

  auto mapped = table.lookup("/r/Synonym", "CN");
  REQUIRE(mapped.status == MappingTable::Status::Mapped);
  CHECK(mapped.entry->dimension == Dimension::Similarity);

  mapped = table.lookup("at:xWant", "AT");
  REQUIRE(mapped.status == MappingTable::Status::Mapped);
  CHECK(mapped.entry->dimension == Dimension::DesireGoal);

  CHECK(table.lookup("/r/dbpedia/genre", "CN").status ==
        MappingTable::Status::Excluded);
  CHECK(table.lookup("/r/dbpedia/field", "CN").status ==
        MappingTable::Status::Excluded);

  mapped = table.lookup("/r/Antonym", "CN");
  REQUIRE(mapped.status == MappingTable::Status::Mapped);
  CHECK(mapped.entry->dimension == Dimension::Distinctness);
  CHECK(mapped.entry->polarity == Polarity::Positive);

  mapped = table.lookup("/r/NotDesires", "CN");
  REQUIRE(mapped.status == MappingTable::Status::Mapped);
  CHECK(mapped.entry->dimension == Dimension::DesireGoal);
  CHECK(mapped.entry->polarity == Polarity::Negated);
}

TEST_CASE("AtLocation resolves to spatial only") {
  const auto result = default_mapping().lookup("/r/AtLocation", "CN");
  REQUIRE(result.status == MappingTable::Status::Mapped);
  CHECK(result.entry->dimension == Dimension::Spatial);
}

TEST_CASE("comparative has no default entries") {
  for (const MappingEntry* e : default_mapping().entries()) {
    CHECK(e->dimension != Dimension::Comparative);
  }
}

TEST_CASE("lookup of an unseen relation fails; lookup is pure") {
  const MappingTable& table = default_mapping();
  CHECK(table.lookup("/r/NoSuchRelation", "CN").status ==
        MappingTable::Status::Unmapped);
  CHECK(table.lookup("wombat", "").status == MappingTable::Status::Unmapped);
  // Same query, same answer.
  const auto a = table.lookup("/r/IsA", "WN");
  const auto b = table.lookup("/r/IsA", "WN");
  CHECK(a.entry == b.entry);
}

TEST_CASE("source-scoped entries win over unscoped ones") {
  MappingTable table;
  table.add({"rel", Dimension::Lexical, Polarity::Positive, ""});
  table.add({"rel", Dimension::Quality, Polarity::Positive, "WD"});
  CHECK(table.lookup("rel", "WD").entry->dimension == Dimension::Quality);
  CHECK(table.lookup("rel", "CN").entry->dimension == Dimension::Lexical);
  CHECK(table.lookup("rel", "").entry->dimension == Dimension::Lexical);
}

TEST_CASE("load_mapping parses a single-row file") {
  std::istringstream in(
      "relation\tdimension\tpolarity\tsource_scope\n"
      "/r/PartOf\tpart-whole\tpositive\t\n");
  const MappingTable table = load_mapping(in);
  CHECK(table.size() == 1);
  const auto result = table.lookup("/r/PartOf", "CN");
  REQUIRE(result.status == MappingTable::Status::Mapped);
  CHECK(result.entry->dimension == Dimension::PartWhole);
}

TEST_CASE("load_mapping rejects duplicates") {
  std::istringstream in(
      "relation\tdimension\tpolarity\tsource_scope\n"
      "/r/PartOf\tpart-whole\tpositive\t\n"
      "/r/PartOf\tspatial\tpositive\t\n");
  CHECK_THROWS_WITH_AS(load_mapping(in),
                       doctest::Contains("duplicate mapping"), DataError);
}

TEST_CASE("load_mapping rejects unknown dimensions, listing legal names") {
  std::istringstream in(
      "relation\tdimension\tpolarity\tsource_scope\n"
      "/r/X\tspatial-temporal\tpositive\t\n");
  try {
    load_mapping(in);
    FAIL("expected DataError");
  } catch (const DataError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("unknown dimension") != std::string::npos);
    CHECK(msg.find("lexical") != std::string::npos);
    CHECK(msg.find("relational-other") != std::string::npos);
  }
}

TEST_CASE("load_mapping rejects bad polarity and bad header") {
  std::istringstream bad_polarity(
      "relation\tdimension\tpolarity\tsource_scope\n"
      "/r/X\tlexical\tmaybe\t\n");
  CHECK_THROWS_WITH_AS(load_mapping(bad_polarity),
                       doctest::Contains("polarity"), DataError);
  std::istringstream bad_header("rel\tdim\n/r/X\tlexical\tpositive\t\n");
  CHECK_THROWS_AS(load_mapping(bad_header), DataError);
  std::istringstream empty("");
  CHECK_THROWS_AS(load_mapping(empty), DataError);
}

TEST_CASE("load_mapping names the malformed line") {
  std::istringstream in(
      "relation\tdimension\tpolarity\tsource_scope\n"
      "/r/A\tlexical\tpositive\t\n"
      "only-two-fields\tlexical\n");
  CHECK_THROWS_WITH_AS(load_mapping(in), doctest::Contains("line 3"),
                       DataError);
}

TEST_CASE("save/load round trip is byte identical") {
  const std::string first = mapping_to_string(default_mapping());
  std::istringstream in(first);
  const MappingTable reloaded = load_mapping(in);
  CHECK(mapping_to_string(reloaded) == first);
  CHECK(reloaded.size() == default_mapping().size());
}

TEST_CASE("mapping checksum is stable across construction") {
  CHECK(mapping_checksum(default_mapping()) ==
        mapping_checksum(default_mapping()));
}
