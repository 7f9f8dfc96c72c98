#include "kising/dynamics.hpp"

#include <cmath>
#include <vector>

#include "kising/common.hpp"
#include "kising/rng.hpp"

namespace kising {

double local_field(const Eigen::MatrixXd& couplings, const Eigen::VectorXd& fields,
                   std::span<const std::int8_t> state, int i) {
  const int n = static_cast<int>(couplings.rows());
  if (i < 0 || i >= n) throw parameter_error("local_field: spin index out of range");
  if (static_cast<int>(state.size()) != n || fields.size() != n)
    throw parameter_error("local_field: dimension mismatch");
  double h = fields[i];
  for (int j = 0; j < n; ++j) h += couplings(i, j) * state[j];
  return h;
}

SpinHistory simulate_steps(const ModelParams& params, long n_steps, long burn_in_steps,
                           std::uint64_t seed) {
  if (n_steps <= 0) throw parameter_error("simulate: n_steps must be positive");
  if (burn_in_steps < 0) throw parameter_error("simulate: burn_in_steps must be >= 0");
  const int n = params.n_spins;
  if (n <= 0 || params.couplings.rows() != n || params.couplings.cols() != n ||
      params.fields.size() != n)
    throw parameter_error("simulate: inconsistent model dimensions");

  auto gen = seeded_engine(seed, /*stream=*/0x64796eULL);

  std::vector<std::int8_t> state(n);
  for (int j = 0; j < n; ++j) state[j] = static_cast<std::int8_t>(rademacher(gen));

  SpinHistory hist;
  hist.n_spins = n;
  hist.seed = seed;
  hist.states.resize(static_cast<std::size_t>(n_steps) * n);
  hist.schedule.resize(n_steps);
  hist.outcomes.resize(n_steps);

  const long total = burn_in_steps + n_steps;
  for (long step = 0; step < total; ++step) {
    const int i = uniform_below(gen, n);
    double field = params.fields[i];
    for (int j = 0; j < n; ++j) field += params.couplings(i, j) * state[j];
    const double p_plus = 0.5 * (1.0 + std::tanh(field));
    const std::int8_t next = uniform01(gen) < p_plus ? std::int8_t{1} : std::int8_t{-1};

    if (step >= burn_in_steps) {
      const long t = step - burn_in_steps;
      std::copy(state.begin(), state.end(), hist.states.begin() + t * n);
      hist.schedule[t] = i;
      hist.outcomes[t] = next;
    }
    state[i] = next;
  }
  return hist;
}

SpinHistory simulate(const ModelParams& params, double updates_per_spin, long burn_in_steps,
                     std::uint64_t seed) {
  if (updates_per_spin <= 0.0)
    throw parameter_error("simulate: updates_per_spin must be positive");
  const long n_steps = std::lround(updates_per_spin * params.n_spins);
  return simulate_steps(params, n_steps, burn_in_steps, seed);
}

}  // namespace kising
