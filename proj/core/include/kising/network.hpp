#pragma once

#include <Eigen/Dense>
#include <cstdint>

namespace kising {

/// Ground-truth network: couplings J (row i = bonds onto spin i), fields h,
/// and the generation metadata.
struct ModelParams {
  int n_spins = 0;            // N
  double avg_degree = 0.0;    // c
  double coupling_scale = 0.0;  // g
  Eigen::MatrixXd couplings;  // N x N, J(i, j) couples spin j onto spin i; zero diagonal
  Eigen::VectorXd fields;     // length N
  std::uint64_t seed = 0;
};

/// Draw a diluted asymmetric binary-coupling network. Each ordered pair
/// (i, j), i != j, independently receives +g/sqrt(c) or -g/sqrt(c) with
/// probability c/(2N) each, zero otherwise; the diagonal stays zero. Pairs
/// are drawn in row-major order so a seed pins the matrix bit-for-bit.
ModelParams generate_network(int n_spins, double avg_degree, double coupling_scale,
                             double field_value, std::uint64_t seed);

}  // namespace kising
