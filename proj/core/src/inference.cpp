#include "kising/inference.hpp"

#include <cmath>
#include <string>

#include "kising/common.hpp"
#include "kising/dynamics.hpp"

namespace kising {

CouplingEstimate CouplingEstimate::zero(int n_spins) {
  CouplingEstimate e;
  e.couplings = Eigen::MatrixXd::Zero(n_spins, n_spins);
  e.fields = Eigen::VectorXd::Zero(n_spins);
  e.active_mask = BoolMatrix::Constant(n_spins, n_spins, false);
  return e;
}

double local_field(const CouplingEstimate& estimate, std::span<const std::int8_t> state, int i) {
  return local_field(estimate.couplings, estimate.fields, state, i);
}

namespace {

void check_dims(const SpinHistory& history, const CouplingEstimate& estimate, const char* where) {
  if (estimate.n_spins() != history.n_spins || estimate.couplings.cols() != history.n_spins ||
      estimate.fields.size() != history.n_spins)
    throw parameter_error(std::string(where) + ": estimate dimensions do not match history");
}

// One sweep over the recorded updates: negative log-likelihood and, when
// grad is non-null, the ascent gradient (field column 0, sources 1..N).
double likelihood_pass(const SpinHistory& history, const Eigen::MatrixXd& J,
                       const Eigen::VectorXd& h, Eigen::MatrixXd* grad) {
  const int n = history.n_spins;
  const long steps = history.n_steps();
  if (grad) grad->setZero();

  double nll = 0.0;
  const std::int8_t* row = history.states.data();
  for (long t = 0; t < steps; ++t, row += n) {
    const int i = history.schedule[t];
    double field = h[i];
    for (int j = 0; j < n; ++j) field += J(i, j) * row[j];
    const double out = history.outcomes[t];
    nll -= out * field - log_2cosh(field);
    if (grad) {
      const double resid = out - std::tanh(field);
      (*grad)(i, 0) += resid;
      for (int j = 0; j < n; ++j) (*grad)(i, 1 + j) += resid * row[j];
    }
  }
  return nll;
}

enum class Penalty { none, l1, smooth };

struct FitState {
  Eigen::MatrixXd J;
  Eigen::VectorXd h;
  BoolMatrix active;
};

double penalty_value(const FitState& s, Penalty kind, double lambda, double mu) {
  if (kind == Penalty::l1) return lambda * s.J.array().abs().sum();
  if (kind == Penalty::smooth) {
    double acc = 0.0;
    for (int i = 0; i < s.J.rows(); ++i)
      for (int j = 0; j < s.J.cols(); ++j) acc += log_cosh(s.J(i, j) / mu);
    return lambda * mu * acc;
  }
  return 0.0;
}

CouplingEstimate fit_impl(const SpinHistory& history, Penalty kind, double lambda, double mu,
                          const FitOptions& options, const CouplingEstimate* warm_start) {
  if (lambda < 0.0) throw parameter_error("fit: penalty must be >= 0");
  if (kind == Penalty::smooth && mu <= 0.0)
    throw parameter_error("fit_l1_smooth: smoothing must be positive");
  if (options.rate < 0.0) throw parameter_error("fit: rate must be positive");
  if (history.n_steps() == 0) throw parameter_error("fit: empty history");

  const int n = history.n_spins;
  const double updates_per_spin = history.updates_per_spin();
  const double rate0 = options.rate > 0.0 ? options.rate : 1.0 / updates_per_spin;

  FitState cur;
  if (warm_start) {
    if (warm_start->n_spins() != n)
      throw parameter_error("fit: warm start dimensions do not match history");
    cur.J = warm_start->couplings;
    cur.h = warm_start->fields;
    cur.active = warm_start->couplings.array() != 0.0;
  } else {
    cur.J = Eigen::MatrixXd::Zero(n, n);
    cur.h = Eigen::VectorXd::Zero(n);
    cur.active = BoolMatrix::Constant(n, n, false);
  }

  Eigen::MatrixXd grad(n, n + 1);
  double eta = rate0;
  int clean_steps = 0;

  FitState prev = cur;
  Eigen::MatrixXd prev_grad;
  double prev_objective = 0.0;
  bool have_prev = false;

  const auto is_candidate = [&](int i, int j) { return options.include_diagonal || i != j; };

  const auto apply_step = [&](FitState& s, const Eigen::MatrixXd& g, double step) {
    for (int i = 0; i < n; ++i) {
      s.h[i] += step * g(i, 0);
      for (int j = 0; j < n; ++j) {
        if (!is_candidate(i, j)) continue;
        const double gij = g(i, 1 + j);
        double& J = s.J(i, j);
        if (kind == Penalty::none) {
          J += step * gij;
          s.active(i, j) = J != 0.0;
        } else if (kind == Penalty::smooth) {
          J += step * (gij - lambda * std::tanh(J / mu));
          s.active(i, j) = J != 0.0;
        } else {
          if (s.active(i, j)) {
            const double next = J + step * (gij - lambda * sgn(J));
            if (next == 0.0 || next * J < 0.0) {
              J = 0.0;
              s.active(i, j) = false;
            } else {
              J = next;
            }
          } else if (std::abs(gij) > lambda) {
            // Re-entry: the data gradient beats the penalty; move off zero in
            // its direction.
            J = step * (gij - lambda * sgn(gij));
            s.active(i, j) = J != 0.0;
          }
        }
      }
    }
  };

  // Residual of the (sub)gradient optimality conditions at the current point,
  // in per-update units, plus re-entry eligibility for masked bonds.
  const auto convergence_residual = [&](const FitState& s, const Eigen::MatrixXd& g,
                                        bool& reentry) {
    double worst = 0.0;
    reentry = false;
    for (int i = 0; i < n; ++i) {
      worst = std::max(worst, std::abs(g(i, 0)));
      for (int j = 0; j < n; ++j) {
        if (!is_candidate(i, j)) continue;
        const double gij = g(i, 1 + j);
        if (kind == Penalty::none) {
          worst = std::max(worst, std::abs(gij));
        } else if (kind == Penalty::smooth) {
          worst = std::max(worst, std::abs(gij - lambda * std::tanh(s.J(i, j) / mu)));
        } else {
          if (s.active(i, j)) {
            worst = std::max(worst, std::abs(gij - lambda * sgn(s.J(i, j))));
          } else if (std::abs(gij) > lambda) {
            reentry = true;
          }
        }
      }
    }
    return worst / updates_per_spin;
  };

  CouplingEstimate result;
  result.lambda_used = kind == Penalty::none ? 0.0 : lambda;
  result.tolerance_used = options.tolerance;
  result.includes_diagonal = options.include_diagonal;

  long iter = 0;
  for (; iter < options.max_iters; ++iter) {
    const double nll = likelihood_pass(history, cur.J, cur.h, &grad);
    const double objective = nll + penalty_value(cur, kind, lambda, mu);

    if (options.backtracking && have_prev && objective > prev_objective) {
      // Last step overshot; retry it from the saved point at half the rate.
      eta *= 0.5;
      clean_steps = 0;
      if (eta < rate0 * 0x1.0p-40) break;  // step size has collapsed; give up
      cur = prev;
      apply_step(cur, prev_grad, eta);
      continue;
    }

    bool reentry = false;
    const double residual = convergence_residual(cur, grad, reentry);
    if (residual < options.tolerance && !reentry) {
      result.converged = true;
      break;
    }

    prev = cur;
    prev_grad = grad;
    prev_objective = objective;
    have_prev = true;
    // Recover the rate after a stretch of clean descent.
    if (options.backtracking && ++clean_steps >= 20 && eta < rate0) {
      eta = std::min(rate0, eta * 2.0);
      clean_steps = 0;
    }
    apply_step(cur, grad, eta);
  }

  result.couplings = std::move(cur.J);
  result.fields = std::move(cur.h);
  result.active_mask = std::move(cur.active);
  result.iterations = static_cast<int>(iter);
  return result;
}

}  // namespace

double neg_log_likelihood(const SpinHistory& history, const CouplingEstimate& estimate) {
  check_dims(history, estimate, "neg_log_likelihood");
  return likelihood_pass(history, estimate.couplings, estimate.fields, nullptr);
}

Eigen::MatrixXd likelihood_gradient(const SpinHistory& history, const CouplingEstimate& estimate) {
  check_dims(history, estimate, "likelihood_gradient");
  Eigen::MatrixXd grad(history.n_spins, history.n_spins + 1);
  likelihood_pass(history, estimate.couplings, estimate.fields, &grad);
  return grad;
}

CouplingEstimate fit_unregularized(const SpinHistory& history, const FitOptions& options) {
  return fit_impl(history, Penalty::none, 0.0, 0.0, options, nullptr);
}

CouplingEstimate fit_l1(const SpinHistory& history, double lambda, const FitOptions& options,
                        const CouplingEstimate* warm_start) {
  return fit_impl(history, Penalty::l1, lambda, 0.0, options, warm_start);
}

CouplingEstimate fit_l1_smooth(const SpinHistory& history, double lambda, double smoothing,
                               const FitOptions& options) {
  return fit_impl(history, Penalty::smooth, lambda, smoothing, options, nullptr);
}

CouplingEstimate apply_rounding(CouplingEstimate estimate, double threshold) {
  if (threshold < 0.0) throw parameter_error("apply_rounding: threshold must be >= 0");
  for (int i = 0; i < estimate.couplings.rows(); ++i) {
    for (int j = 0; j < estimate.couplings.cols(); ++j) {
      if (std::abs(estimate.couplings(i, j)) <= threshold) {
        estimate.couplings(i, j) = 0.0;
        estimate.active_mask(i, j) = false;
      }
    }
  }
  return estimate;
}

}  // namespace kising
