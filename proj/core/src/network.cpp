#include "kising/network.hpp"

#include <cmath>

#include "kising/common.hpp"
#include "kising/rng.hpp"

namespace kising {

ModelParams generate_network(int n_spins, double avg_degree, double coupling_scale,
                             double field_value, std::uint64_t seed) {
  if (n_spins <= 0) throw parameter_error("generate_network: n_spins must be positive");
  if (avg_degree < 0.0 || avg_degree > static_cast<double>(n_spins))
    throw parameter_error("generate_network: avg_degree must lie in [0, n_spins]");
  if (coupling_scale <= 0.0)
    throw parameter_error("generate_network: coupling_scale must be positive");

  const int n = n_spins;
  const double p_half = avg_degree / (2.0 * n);  // per sign
  const double magnitude =
      avg_degree > 0.0 ? coupling_scale / std::sqrt(avg_degree) : 0.0;

  ModelParams params;
  params.n_spins = n;
  params.avg_degree = avg_degree;
  params.coupling_scale = coupling_scale;
  params.couplings = Eigen::MatrixXd::Zero(n, n);
  params.fields = Eigen::VectorXd::Constant(n, field_value);
  params.seed = seed;

  auto gen = seeded_engine(seed, /*stream=*/0x6e657477ULL);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const double u = uniform01(gen);
      if (u < p_half) {
        params.couplings(i, j) = magnitude;
      } else if (u < 2.0 * p_half) {
        params.couplings(i, j) = -magnitude;
      }
    }
  }
  return params;
}

}  // namespace kising
