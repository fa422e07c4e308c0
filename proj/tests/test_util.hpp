#pragma once

#include <array>
#include <cstdint>

#include "ldp/weights.hpp"

// deterministic xorshift generator: property tests must reproduce exactly
struct Rng {
  std::uint64_t state;

  explicit Rng(std::uint64_t seed = 0x9e3779b97f4a7c15ULL) : state(seed) {}

  std::uint64_t next() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  }

  // uniform in [lo, hi]
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(
                    next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

// random sorted valid weight vector with entries in [1, max_w]
inline ldp::WeightVector random_valid_weights(Rng& rng, std::int64_t max_w) {
  for (;;) {
    std::array<std::int64_t, 4> a;
    for (auto& x : a) x = rng.range(1, max_w);
    std::sort(a.begin(), a.end());
    if (ldp::weights_valid_sorted(a[0], a[1], a[2], a[3]))
      return ldp::validate_weights(a);
  }
}
