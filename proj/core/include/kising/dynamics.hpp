#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <span>

#include "kising/history.hpp"
#include "kising/network.hpp"

namespace kising {

/// Instantaneous field on spin i: h_i + sum_j J(i, j) s_j.
double local_field(const Eigen::MatrixXd& couplings, const Eigen::VectorXd& fields,
                   std::span<const std::int8_t> state, int i);

inline double local_field(const ModelParams& params, std::span<const std::int8_t> state, int i) {
  return local_field(params.couplings, params.fields, state, i);
}

/// Asynchronous Glauber dynamics: at each step one spin is chosen uniformly
/// at random and redrawn to +1 with probability (1 + tanh H_i)/2. The first
/// `burn_in_steps` steps are discarded; the next `n_steps` are recorded.
SpinHistory simulate_steps(const ModelParams& params, long n_steps, long burn_in_steps,
                           std::uint64_t seed);

/// Convenience wrapper recording round(N * updates_per_spin) steps.
SpinHistory simulate(const ModelParams& params, double updates_per_spin, long burn_in_steps,
                     std::uint64_t seed);

}  // namespace kising
