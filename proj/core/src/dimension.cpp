#include "kgdim/dimension.hpp"

namespace kgdim {

namespace {

constexpr std::array<std::string_view, kDimensionCount> kNames = {
    "lexical",     "similarity", "distinctness", "taxonomic",
    "part-whole",  "spatial",    "creation",     "utility",
    "desire-goal", "quality",    "comparative",  "temporal",
    "relational-other",
};

}  // namespace

const std::array<Dimension, kDimensionCount>& all_dimensions() {
  static const std::array<Dimension, kDimensionCount> dims = [] {
    std::array<Dimension, kDimensionCount> a{};
    for (std::size_t i = 0; i < kDimensionCount; ++i) {
      a[i] = static_cast<Dimension>(i);
    }
    return a;
  }();
  return dims;
}

std::string_view dimension_name(Dimension d) {
  return kNames[static_cast<std::size_t>(d)];
}

std::optional<Dimension> parse_dimension(std::string_view name) {
  for (std::size_t i = 0; i < kDimensionCount; ++i) {
    if (kNames[i] == name) return static_cast<Dimension>(i);
  }
  return std::nullopt;
}

const std::string& dimension_name_list() {
  static const std::string list = [] {
    std::string s;
    for (std::size_t i = 0; i < kDimensionCount; ++i) {
      if (i > 0) s += ", ";
      s += kNames[i];
    }
    return s;
  }();
  return list;
}

}  // namespace kgdim
