#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "pxp/basis.hpp"
#include "pxp/operators.hpp"
#include "pxp/spectra.hpp"

namespace pxp {

/// Infinite-temperature average tr(A) / D_H.
double thermal_beta0(const SparseOperator& a);

/// Long-time (diagonal-ensemble) average split into the zero-mode and
/// nonzero-mode contributions. Degenerate clusters (eigenvalues within
/// cluster_tol) are rotated to diagonalize A before taking diagonal weights.
struct DiagonalEnsembleResult {
    double total = 0.0;
    double nonzero_part = 0.0;
    double zero_part = 0.0;
};

DiagonalEnsembleResult diagonal_ensemble(const EigenSystem& es, const Eigen::VectorXd& psi0,
                                         const SparseOperator& a, double cluster_tol = 1e-9);

struct SweepRow {
    int n_sites = 0;
    double delta = 0.0;
    std::string op;
    std::string init;
    double total = 0.0;
    double nonzero_part = 0.0;
    double zero_part = 0.0;
};

/// Long-time averages of the three imbalances from their initial states over
/// a Delta grid, one diagonalization per Delta; rows ordered by (delta, op).
std::vector<SweepRow> imbalance_sweep(const Basis& basis, const std::vector<double>& deltas,
                                      int threads = 1);

struct TimeAverageReport {
    double running_mean = 0.0;
    double ensemble_value = 0.0;
    double deviation = 0.0;
};

/// Mean of a measured series over the second half of the time window,
/// compared against the diagonal-ensemble prediction.
TimeAverageReport time_average_check(const std::vector<double>& ts,
                                     const std::vector<double>& series, double ensemble_value);

} // namespace pxp
