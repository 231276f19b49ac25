#pragma once

#include <optional>
#include <string>

#include "kgdim/dimension.hpp"

namespace kgdim {

// One tabular KG assertion. Labels may be multi-valued ('|'-separated);
// they are kept verbatim here and normalized only where a module needs it.
struct Edge {
  std::string id;
  std::string node1;
  std::string relation;
  std::string node2;
  std::string node1_label;
  std::string node2_label;
  std::string relation_label;
  std::string source;
  std::string sentence;
  std::optional<Dimension> dimension;

  bool operator==(const Edge&) const = default;
};

}  // namespace kgdim
