#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace kising {

/// Invalid arguments, dimension mismatches, out-of-range indices.
class parameter_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Failures of numerical procedures (singular solves, empty averages).
class numeric_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// File parsing and serialization failures.
class io_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// splitmix64 mixing step; used to derive independent RNG streams from a base seed.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) noexcept {
  return splitmix64(base ^ splitmix64(stream + 0x632be59bd9b4e019ULL));
}

/// log(2 cosh x) without overflow for large |x|.
inline double log_2cosh(double x) noexcept {
  const double a = std::abs(x);
  return a + std::log1p(std::exp(-2.0 * a));
}

/// log cosh x, same overflow care.
inline double log_cosh(double x) noexcept {
  return log_2cosh(x) - 0.6931471805599453;  // ln 2
}

inline double sgn(double x) noexcept { return (x > 0.0) - (x < 0.0); }

/// FNV-1a over a byte string; stable across platforms, used to stamp output tables.
constexpr std::uint64_t fnv1a64(std::string_view s) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace kising
