#pragma once

#include <cstdint>
#include <string_view>

namespace kgdim {

// FNV-1a over bytes. Used for stable checksums and per-item seed derivation;
// never for adversarial input.
constexpr uint64_t fnv1a64(std::string_view bytes,
                           uint64_t h = 0xcbf29ce484222325ULL) {
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

constexpr uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Per-item seed: identical on every platform, independent of evaluation
// order, so parallel schedules cannot change sampled output.
constexpr uint64_t derive_seed(uint64_t global_seed, std::string_view item_id) {
  return splitmix64(fnv1a64(item_id) ^ splitmix64(global_seed));
}

}  // namespace kgdim
