#pragma once

#include <cstdint>
#include <random>

namespace kgdim {

// mt19937_64 with hand-rolled bounded draws. std::uniform_int_distribution
// is implementation-defined, which would break the cross-machine determinism
// contract, so we never use <random> distributions.
class Rng {
public:
  explicit Rng(uint64_t seed) : gen_(seed) {}

  uint64_t next_u64() { return gen_(); }

  // Uniform in [0, n). n must be > 0. Multiply-shift bounding; the bias is
  // below 2^-64 and identical everywhere.
  uint64_t bounded(uint64_t n) {
    const auto x = static_cast<unsigned __int128>(next_u64());
    return static_cast<uint64_t>((x * n) >> 64);
  }

  // Uniform double in [0, 1) with 53 random bits.
  double unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

private:
  std::mt19937_64 gen_;
};

}  // namespace kgdim
