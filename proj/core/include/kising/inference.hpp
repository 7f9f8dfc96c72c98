#pragma once

#include <Eigen/Dense>
#include <optional>

#include "kising/history.hpp"

namespace kising {

using BoolMatrix = Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic>;

/// Inferred couplings and fields, with an active-bond mask. A mask entry is
/// false exactly when the corresponding coupling is exactly zero (pruned or
/// never activated).
struct CouplingEstimate {
  Eigen::MatrixXd couplings;  // N x N
  Eigen::VectorXd fields;     // N
  BoolMatrix active_mask;     // N x N
  double lambda_used = 0.0;   // L1 penalty coefficient the fit ran at
  double tolerance_used = 0.0;
  int iterations = 0;
  bool converged = false;
  bool includes_diagonal = false;  // whether self-couplings were fit parameters

  int n_spins() const { return static_cast<int>(couplings.rows()); }

  /// Zero estimate of the given size (all bonds masked out).
  static CouplingEstimate zero(int n_spins);
};

double local_field(const CouplingEstimate& estimate, std::span<const std::int8_t> state, int i);

/// Negative log-likelihood of the recorded update outcomes:
///   -sum over steps of [ outcome * H_i - log 2 cosh H_i ],
/// with H_i the local field of the scheduled spin at the pre-update state.
double neg_log_likelihood(const SpinHistory& history, const CouplingEstimate& estimate);

/// Ascent gradient of the log-likelihood, N x (N+1): column 0 is the field
/// component (source s_0 = 1), column 1+j the coupling from source spin j.
///   entry (i, j) = sum over updates of spin i of [ outcome - tanh H_i ] s_j.
Eigen::MatrixXd likelihood_gradient(const SpinHistory& history, const CouplingEstimate& estimate);

struct FitOptions {
  double rate = 0.0;        // learning rate; <= 0 means 1/T with T = updates per spin
  double tolerance = 1e-5;  // per-update gradient infinity-norm threshold
  long max_iters = 50000;
  bool backtracking = true;   // halve the rate when the penalized objective rises
  bool include_diagonal = false;
};

/// Plain gradient ascent on the log-likelihood from zero initialization.
/// Converged when max |gradient| / T < tolerance. Non-convergence within
/// max_iters is reported through the flag, not an exception.
CouplingEstimate fit_unregularized(const SpinHistory& history, const FitOptions& options = {});

/// L1-penalized fit: couplings follow
///   dJ = rate * (gradient - lambda * sgn(J)),
/// a step that would flip a coupling's sign sets it to exactly zero and clears
/// its mask; a masked coupling re-enters when its data gradient magnitude
/// exceeds lambda. Fields are never penalized. Convergence additionally
/// requires that no masked coupling is eligible to re-enter.
CouplingEstimate fit_l1(const SpinHistory& history, double lambda, const FitOptions& options = {},
                        const CouplingEstimate* warm_start = nullptr);

/// Smooth surrogate: penalty lambda * mu * sum log cosh(J/mu), i.e. the sign
/// term above becomes tanh(J/mu). Fully differentiable, no masking; couplings
/// are shrunk but never exactly zero.
CouplingEstimate fit_l1_smooth(const SpinHistory& history, double lambda, double smoothing,
                               const FitOptions& options = {});

/// Bonds with |J| <= threshold are zeroed and masked out. For the smooth fit a
/// threshold of 2*mu reproduces the hard fit's absent set; the mask-based
/// zeros of fit_l1 normally make rounding unnecessary.
CouplingEstimate apply_rounding(CouplingEstimate estimate, double threshold);

}  // namespace kising
