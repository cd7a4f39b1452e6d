#pragma once

#include <cstdint>

#include "csb/special_functions.hpp"

namespace csb {

// Counter-based splittable generator in the SplitMix64 style: every output
// is a mix of (key, counter), so a (seed, stream) pair fully determines the
// sequence and parallel streams never share state.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
      : key_(mix(seed + 0x9e3779b97f4a7c15ull * (stream + 1)) ^ mix(stream + 0x6a09e667f3bcc909ull)) {}

  std::uint64_t next_u64() {
    counter_ += 0x9e3779b97f4a7c15ull;
    return mix(key_ ^ counter_);
  }

  // Uniform on the open interval (0,1); endpoints are unreachable so
  // inverse-transform sampling stays finite.
  double next_unit() {
    const std::uint64_t bits = next_u64() >> 12;  // 52 bits
    return (static_cast<double>(bits) + 0.5) * 0x1.0p-52;
  }

  double next_gaussian() { return inv_std_normal_cdf(next_unit()); }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ull;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebull;
    z ^= z >> 31;
    return z;
  }

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace csb
