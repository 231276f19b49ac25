#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace kgdim {

// The closed vocabulary of 13 knowledge dimensions, in canonical order.
// Serialized names are lowercase and hyphenated; see dimension_name().
enum class Dimension : uint8_t {
  Lexical = 0,
  Similarity,
  Distinctness,
  Taxonomic,
  PartWhole,
  Spatial,
  Creation,
  Utility,
  DesireGoal,
  Quality,
  Comparative,
  Temporal,
  RelationalOther,
};

inline constexpr std::size_t kDimensionCount = 13;

const std::array<Dimension, kDimensionCount>& all_dimensions();

// Stable serialized name, e.g. Dimension::PartWhole -> "part-whole".
std::string_view dimension_name(Dimension d);

// Inverse of dimension_name(); nullopt for anything outside the vocabulary.
std::optional<Dimension> parse_dimension(std::string_view name);

// "lexical, similarity, ..." -- used in error messages about bad names.
const std::string& dimension_name_list();

}  // namespace kgdim
