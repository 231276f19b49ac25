#include "kgdim/mapping.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "kgdim/error.hpp"
#include "kgdim/hash.hpp"
#include "kgdim/text.hpp"

namespace kgdim {

std::string_view polarity_name(Polarity p) {
  return p == Polarity::Positive ? "positive" : "negated";
}

void MappingTable::add(MappingEntry entry) {
  auto key = std::make_pair(entry.relation, entry.source_scope);
  auto [it, inserted] = entries_.emplace(std::move(key), std::move(entry));
  if (!inserted) {
    throw DataError("duplicate mapping for relation '" + it->first.first +
                    "' (scope '" + it->first.second + "')");
  }
}

void MappingTable::add_excluded_prefix(std::string prefix) {
  excluded_prefixes_.push_back(std::move(prefix));
}

MappingTable::Lookup MappingTable::lookup(std::string_view relation,
                                          std::string_view source) const {
  for (const auto& prefix : excluded_prefixes_) {
    if (relation.starts_with(prefix)) {
      return {Status::Excluded, nullptr};
    }
  }
  if (!source.empty()) {
    auto it = entries_.find({std::string(relation), std::string(source)});
    if (it != entries_.end()) return {Status::Mapped, &it->second};
  }
  auto it = entries_.find({std::string(relation), std::string()});
  if (it != entries_.end()) return {Status::Mapped, &it->second};
  return {Status::Unmapped, nullptr};
}

std::vector<const MappingEntry*> MappingTable::entries() const {
  std::vector<const MappingEntry*> out;
  out.reserve(entries_.size());
  for (const auto& [key, entry] : entries_) out.push_back(&entry);
  return out;
}

MappingTable load_mapping(std::istream& in) {
  MappingTable table;
  std::string line;
  uint64_t lineno = 0;

  if (!std::getline(in, line)) {
    throw DataError("mapping file is empty (expected header)");
  }
  ++lineno;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "relation\tdimension\tpolarity\tsource_scope") {
    throw DataError(
        "mapping file line 1: expected header "
        "'relation\\tdimension\\tpolarity\\tsource_scope'");
  }

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = split_tabs(line);
    if (fields.size() != 4) {
      throw DataError("mapping file line " + std::to_string(lineno) +
                      ": expected 4 tab-separated fields, got " +
                      std::to_string(fields.size()));
    }
    MappingEntry entry;
    entry.relation = std::string(fields[0]);
    if (entry.relation.empty()) {
      throw DataError("mapping file line " + std::to_string(lineno) +
                      ": empty relation");
    }
    const auto dim = parse_dimension(fields[1]);
    if (!dim) {
      throw DataError("mapping file line " + std::to_string(lineno) +
                      ": unknown dimension '" + std::string(fields[1]) +
                      "' (legal names: " + dimension_name_list() + ")");
    }
    entry.dimension = *dim;
    if (fields[2] == "positive") {
      entry.polarity = Polarity::Positive;
    } else if (fields[2] == "negated") {
      entry.polarity = Polarity::Negated;
    } else {
      throw DataError("mapping file line " + std::to_string(lineno) +
                      ": polarity must be 'positive' or 'negated', got '" +
                      std::string(fields[2]) + "'");
    }
    entry.source_scope = std::string(fields[3]);
    try {
      table.add(std::move(entry));
    } catch (const DataError& e) {
      throw DataError("mapping file line " + std::to_string(lineno) + ": " +
                      e.what());
    }
  }
  return table;
}

MappingTable load_mapping_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open mapping file: " + path);
  return load_mapping(in);
}

void save_mapping(const MappingTable& table, std::ostream& out) {
  out << "relation\tdimension\tpolarity\tsource_scope\n";
  for (const MappingEntry* e : table.entries()) {
    out << e->relation << '\t' << dimension_name(e->dimension) << '\t'
        << polarity_name(e->polarity) << '\t' << e->source_scope << '\n';
  }
}

std::string mapping_to_string(const MappingTable& table) {
  std::ostringstream os;
  save_mapping(table, os);
  return os.str();
}

uint64_t mapping_checksum(const MappingTable& table) {
  return fnv1a64(mapping_to_string(table));
}

}  // namespace kgdim
