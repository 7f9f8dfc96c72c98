#include "kising/history.hpp"

#include <string>

#include "kising/common.hpp"

namespace kising {

void SpinHistory::validate() const {
  const long steps = n_steps();
  if (n_spins <= 0) throw parameter_error("history: n_spins must be positive");
  if (static_cast<long>(states.size()) != steps * n_spins)
    throw parameter_error("history: states block does not match n_steps x n_spins");
  if (static_cast<long>(outcomes.size()) != steps)
    throw parameter_error("history: outcomes length mismatch");
  for (long t = 0; t < steps; ++t) {
    const int i = schedule[t];
    if (i < 0 || i >= n_spins)
      throw parameter_error("history: schedule index out of range at step " + std::to_string(t));
    if (outcomes[t] != 1 && outcomes[t] != -1)
      throw parameter_error("history: outcome not ±1 at step " + std::to_string(t));
  }
  for (std::int8_t s : states)
    if (s != 1 && s != -1) throw parameter_error("history: state entry not ±1");
  // Consecutive rows may change only at the scheduled spin, and that change
  // must equal the recorded outcome.
  for (long t = 0; t + 1 < steps; ++t) {
    const auto cur = state(t);
    const auto nxt = state(t + 1);
    for (int j = 0; j < n_spins; ++j) {
      if (j == schedule[t]) {
        if (nxt[j] != outcomes[t])
          throw parameter_error("history: outcome does not match next row at step " +
                                std::to_string(t));
      } else if (cur[j] != nxt[j]) {
        throw parameter_error("history: off-schedule spin changed at step " + std::to_string(t));
      }
    }
  }
}

SpinHistory history_from_compact(int n_spins, std::span<const std::int8_t> initial_state,
                                 std::vector<std::int32_t> schedule,
                                 std::vector<std::int8_t> outcomes, std::uint64_t seed) {
  if (static_cast<int>(initial_state.size()) != n_spins)
    throw parameter_error("history_from_compact: initial state length mismatch");
  if (schedule.size() != outcomes.size())
    throw parameter_error("history_from_compact: schedule/outcomes length mismatch");

  SpinHistory h;
  h.n_spins = n_spins;
  h.seed = seed;
  h.schedule = std::move(schedule);
  h.outcomes = std::move(outcomes);
  const long steps = h.n_steps();
  h.states.resize(static_cast<std::size_t>(steps) * n_spins);

  std::vector<std::int8_t> cur(initial_state.begin(), initial_state.end());
  for (long t = 0; t < steps; ++t) {
    std::copy(cur.begin(), cur.end(), h.states.begin() + t * n_spins);
    cur[h.schedule[t]] = h.outcomes[t];
  }
  h.validate();
  return h;
}

}  // namespace kising
