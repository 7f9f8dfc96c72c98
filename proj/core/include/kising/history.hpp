#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace kising {

/// Recorded trajectory of asynchronous single-spin dynamics.
///
/// Row t of `states` is the configuration immediately before the update at
/// step t; `schedule[t]` is the spin selected at that step and `outcomes[t]`
/// its post-update value. Consecutive rows therefore differ at most at the
/// scheduled index.
struct SpinHistory {
  int n_spins = 0;
  std::vector<std::int8_t> states;    // n_steps x n_spins, row-major, entries ±1
  std::vector<std::int32_t> schedule; // length n_steps
  std::vector<std::int8_t> outcomes;  // length n_steps, entries ±1
  std::uint64_t seed = 0;

  long n_steps() const { return static_cast<long>(schedule.size()); }
  double updates_per_spin() const {
    return n_spins > 0 ? static_cast<double>(n_steps()) / n_spins : 0.0;
  }

  std::span<const std::int8_t> state(long t) const {
    return {states.data() + t * n_spins, static_cast<std::size_t>(n_spins)};
  }

  /// Throws parameter_error if any structural invariant is broken.
  void validate() const;
};

/// Rebuild the full state block from the initial row plus the update stream.
SpinHistory history_from_compact(int n_spins, std::span<const std::int8_t> initial_state,
                                 std::vector<std::int32_t> schedule,
                                 std::vector<std::int8_t> outcomes, std::uint64_t seed);

}  // namespace kising
