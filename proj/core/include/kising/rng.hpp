#pragma once

#include <cstdint>
#include <random>

#include "kising/common.hpp"

namespace kising {

// Uniform draws built directly on the mt19937_64 word stream. The std
// distributions are implementation-defined, so rolling the mapping here keeps
// generated data identical across standard libraries.

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform01(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

/// Unbiased uniform integer in [0, n), n > 0.
inline int uniform_below(std::mt19937_64& gen, int n) {
  const auto un = static_cast<std::uint64_t>(n);
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % un;
  std::uint64_t x = gen();
  while (x >= limit) x = gen();
  return static_cast<int>(x % un);
}

/// ±1 with equal probability.
inline int rademacher(std::mt19937_64& gen) {
  return (gen() >> 63) ? 1 : -1;
}

inline std::mt19937_64 seeded_engine(std::uint64_t seed, std::uint64_t stream = 0) {
  return std::mt19937_64(derive_seed(seed, stream));
}

}  // namespace kising
