#pragma once

#include <cstdint>

#include "qtensor/decompose.hpp"

namespace qtensor {

/// splitmix64; self-contained so seeded runs are reproducible across
/// standard libraries and platforms.
struct Rng {
  std::uint64_t state;

  explicit Rng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform-ish integer in [lo, hi]; the modulo bias is irrelevant here.
  int uniform(int lo, int hi) {
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

/// Random decomposition with multiplicities in [0, max_mult].
inline Decomposition random_decomposition(const RootSystem& rs, Rng& rng, int max_mult = 3) {
  Decomposition a = zero_decomposition(rs);
  for (int d = 0; d < rs.root_count(); ++d) a[d] = rng.uniform(0, max_mult);
  return a;
}

}  // namespace qtensor
