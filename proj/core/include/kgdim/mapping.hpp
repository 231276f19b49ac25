#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kgdim/dimension.hpp"

namespace kgdim {

enum class Polarity : uint8_t { Positive, Negated };

std::string_view polarity_name(Polarity p);

// relation -> dimension, optionally restricted to one source. An empty
// source_scope means the entry applies to any source.
struct MappingEntry {
  std::string relation;
  Dimension dimension = Dimension::Lexical;
  Polarity polarity = Polarity::Positive;
  std::string source_scope;

  bool operator==(const MappingEntry&) const = default;
};

// The relation->dimension function plus the relation prefixes that
// short-circuit lookup to "excluded". Immutable once built; safe to share
// read-only across parallel workers.
class MappingTable {
public:
  enum class Status { Mapped, Excluded, Unmapped };

  struct Lookup {
    Status status = Status::Unmapped;
    const MappingEntry* entry = nullptr;  // set only when Mapped
  };

  // Throws DataError when a (relation, source_scope) pair is already present.
  void add(MappingEntry entry);
  void add_excluded_prefix(std::string prefix);

  // Source-scoped entry wins over the unscoped one; excluded prefixes win
  // over everything.
  Lookup lookup(std::string_view relation, std::string_view source) const;

  std::size_t size() const { return entries_.size(); }
  const std::vector<std::string>& excluded_prefixes() const {
    return excluded_prefixes_;
  }

  // Entries in canonical (relation, source_scope) order.
  std::vector<const MappingEntry*> entries() const;

private:
  std::map<std::pair<std::string, std::string>, MappingEntry> entries_;
  std::vector<std::string> excluded_prefixes_;
};

// Built-in table: ConceptNet, ATOMIC, WordNet, Roget, Wikidata-CS and
// FrameNet relations with their dimensions, plus the "/r/dbpedia" exclusion.
const MappingTable& default_mapping();

// Mapping TSV: header `relation\tdimension\tpolarity\tsource_scope`, UTF-8,
// '\n' line ends, empty source_scope = unscoped.
MappingTable load_mapping(std::istream& in);
MappingTable load_mapping_file(const std::string& path);
void save_mapping(const MappingTable& table, std::ostream& out);
std::string mapping_to_string(const MappingTable& table);

// FNV-1a over the canonical serialization; printed by `kgdim --version`.
uint64_t mapping_checksum(const MappingTable& table);

}  // namespace kgdim
