#pragma once

#include <array>
#include <cstdint>

#include "qwedge/linalg.hpp"

namespace qwedge {

/// xoshiro256** seeded through SplitMix64. The output stream is fixed by this
/// file, so seeded fixtures are reproducible across platforms and compilers
/// (unlike <random> distributions).
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next_u64();
  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  /// Standard normal via Box-Muller; the second variate is cached.
  double normal();
  /// (N(0,1) + i N(0,1)) / sqrt(2), so E|z|^2 = 1.
  Complex complex_normal();

 private:
  std::array<std::uint64_t, 4> s_{};
  bool has_spare_ = false;
  double spare_ = 0.0;
};

std::uint64_t splitmix64(std::uint64_t& state);

/// Independent seed for the `index`-th sample drawn under `base`.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

}  // namespace qwedge
