#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <vector>

#include "kising/history.hpp"
#include "kising/inference.hpp"

namespace kising {

enum class FisherAveraging { update_times, all_times };
enum class InverseMode { full, diagonal };
enum class FisherRefresh { reestimate_on_data, resimulate };
enum class PathMethod { full_l1, approx1, approx2, approx3, j0cut };

/// Per-spin Fisher information matrices of the update likelihood,
///   C^(i)_jk = < (1 - tanh^2 H_i) ds_j ds_k >,
/// indexed by source spins j, k != i and averaged either over spin i's update
/// times or over all recorded times. ds is the spin centered by its temporal
/// mean over the same averaging set (raw spins when centered = false).
struct FisherSet {
  std::vector<Eigen::MatrixXd> per_spin;  // N matrices, each (N-1) x (N-1)
  Eigen::VectorXd spin_means;             // temporal means used for centering
  double updates_per_spin = 0.0;          // T of the history it came from
  CouplingEstimate evaluated_at;          // parameters defining H_i
};

/// Map a source spin j != i to its row/column in C^(i).
inline int source_index(int i, int j) { return j < i ? j : j - 1; }
/// Inverse of source_index.
inline int source_spin(int i, int idx) { return idx < i ? idx : idx + 1; }

Eigen::MatrixXd fisher_matrix(const SpinHistory& history, const CouplingEstimate& estimate,
                              int i, FisherAveraging averaging, bool centered = true);

FisherSet fisher_set(const SpinHistory& history, const CouplingEstimate& estimate,
                     FisherAveraging averaging = FisherAveraging::all_times,
                     bool centered = true);

/// First-order response of the couplings to a small L1 penalty, per unit
/// penalty-per-update: row i solves C^(i) v_i = -lambda * sgn(J0_i).
/// Returned as N x (N-1) in source-index layout.
Eigen::MatrixXd first_order_shift(const FisherSet& fisher, const CouplingEstimate& reference,
                                  double lambda);

struct PruneEvent {
  int target = 0;
  int source = 0;
  double lambda = 0.0;
};

/// Coupling trajectories over an increasing penalty grid. For the pruning
/// methods a bond is exactly zero (and inactive) from its prune event onward;
/// for j0cut the values are the unregularized estimates and only the active
/// flags vary with the threshold.
struct RegPath {
  PathMethod method = PathMethod::full_l1;
  std::vector<double> lambda_grid;
  std::vector<Eigen::MatrixXd> values;  // one N x N matrix per grid point
  std::vector<BoolMatrix> active;       // one mask per grid point
  std::vector<PruneEvent> prune_events;

  int n_points() const { return static_cast<int>(lambda_grid.size()); }
};

struct PathOptions {
  InverseMode inverse_mode = InverseMode::full;
  FisherRefresh fisher_refresh = FisherRefresh::reestimate_on_data;
  std::uint64_t resim_seed = 0;          // seeds fresh dynamics in resimulate mode
  long resim_burn_in = -1;               // < 0 means 100 * N
  FisherAveraging averaging = FisherAveraging::all_times;
  bool centered = true;
};

/// Forward-Euler integration of the penalty flow
///   dJ_ij/dlambda = -(1/T) sum_k [C^(i)]^-1_jk sgn(J_ik),
/// starting from the unregularized optimum at lambda = 0. Bonds crossing zero
/// within a step are clamped there permanently (pruned bonds keep zero
/// velocity); in diagonal mode only the diagonal of the inverse Fisher is
/// used. The Fisher set is refreshed at every grid point from the current
/// parameters, and fields are re-fit by single-spin maximum likelihood.
RegPath integrate_path(const SpinHistory& history, const CouplingEstimate& start,
                       const std::vector<double>& lambda_grid, const PathOptions& options = {});

/// Same flow with an injected Fisher source; used to study the dynamics under
/// controlled curvature. `history` may be null, in which case fields are held
/// fixed.
using FisherProvider = std::function<FisherSet(const CouplingEstimate&, double)>;
RegPath integrate_path_with(const SpinHistory* history, double updates_per_spin,
                            const CouplingEstimate& start, const std::vector<double>& lambda_grid,
                            InverseMode inverse_mode, const FisherProvider& provider);

/// Frozen-slope variant: each bond follows the straight line
///   J_ij(lambda) = J0_ij - (lambda/T) [C^(i)]^-1_jj sgn(J0_ij)
/// with the inverse-diagonal slopes taken once at lambda = 0, clamped at zero
/// permanently; pruned bonds are never rescued.
RegPath linear_extrapolation(const CouplingEstimate& start, const FisherSet& fisher,
                             const std::vector<double>& lambda_grid);

/// Threshold baseline: bonds with |J0| <= threshold are declared absent, the
/// values themselves are untouched.
RegPath j0_cut(const CouplingEstimate& start, const std::vector<double>& threshold_grid);

/// Exact L1 path: warm-started fit_l1 at every grid value, grid starting at 0
/// where the supplied unregularized optimum is recorded as-is.
RegPath l1_path(const SpinHistory& history, const CouplingEstimate& start,
                const std::vector<double>& lambda_grid, const FitOptions& options = {});

/// One-dimensional ML refit of every field with couplings held fixed.
void refit_fields(const SpinHistory& history, const Eigen::MatrixXd& couplings,
                  Eigen::VectorXd& fields);

}  // namespace kising
