#pragma once

namespace kgdim {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace kgdim
