#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "pxp/basis.hpp"
#include "pxp/operators.hpp"
#include "pxp/spectra.hpp"

namespace pxp {

enum class EvolveMethod { Rk4, Eigenbasis };

struct QuenchSpec {
    double delta = 1.0;
    double w = 1.0;
    std::string init = "Z2";
    double t_max = 100.0;
    double dt = 0.005;
    double stride = 0.05;              // output sampling interval
    EvolveMethod method = EvolveMethod::Rk4;
    bool site_observables = true;      // per-site M^z, M^x columns
    std::vector<std::string> overlaps; // extra |<phi|psi>|^2 columns by state name
    bool entanglement = false;         // svn_par, svn_perp columns
    double norm_drift_budget = 1e-6;
};

struct QuenchTrace {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    double final_norm_deviation = 0.0;
    double max_energy_drift = 0.0;
    double dt_used = 0.0;

    std::int64_t column_index(const std::string& name) const;
    std::vector<double> series(const std::string& name) const;
    std::vector<double> times() const { return series("t"); }
};

using StateSink = std::function<void(double, const Eigen::VectorXcd&)>;

struct Rk4Diagnostics {
    double final_norm_deviation = 0.0;
    double max_energy_drift = 0.0;
    double dt_used = 0.0;
    std::int64_t steps = 0;
};

/// Fixed-step RK4 for i dpsi/dt = H psi. No renormalization is applied; the
/// norm drift is reported and an over-budget drift throws.
Rk4Diagnostics evolve_rk4(const SparseOperator& h, const Eigen::VectorXcd& psi0, double t_max,
                          double dt, double stride, const StateSink& sink,
                          double norm_drift_budget = 1e-6);

/// Phase propagation in the eigenbasis, exact up to diagonalization error.
void evolve_eigenbasis(const EigenSystem& es, const Eigen::VectorXcd& psi0,
                       const std::vector<double>& times, const StateSink& sink);

/// Max amplitude difference between a dt and a dt/2 RK4 run at t_probe.
double rk4_convergence_probe(const SparseOperator& h, const Eigen::VectorXcd& psi0,
                             double t_probe, double dt);

double measure_fidelity(const Eigen::VectorXcd& psi, const Eigen::VectorXcd& psi0);
double measure_overlap(const Eigen::VectorXcd& psi, const Eigen::VectorXcd& phi);

/// Site-resolved magnetizations <sigma^z_{j,a}> and <sigma~x_{j,a}>; index
/// order is site_bit(j, a).
struct SiteMagnetizations {
    std::vector<double> mz;
    std::vector<double> mx;
};

/// Precomputed per-site structure over a basis for fast trajectory sampling.
class ObservableSet {
  public:
    explicit ObservableSet(const Basis& basis);

    SiteMagnetizations site_magnetizations(const Eigen::VectorXcd& psi) const;
    double mz_density(const Eigen::VectorXcd& psi) const;

  private:
    std::int64_t dim_;
    int n_sites_;
    std::vector<std::vector<std::int32_t>> occupied_;           // per site
    std::vector<std::vector<std::pair<std::int32_t, std::int32_t>>> flips_; // per site, i < j
    std::vector<double> mz_density_value_;
};

/// Full quench pipeline: build the Hamiltonian, evolve, sample observables.
QuenchTrace run_quench(const Basis& basis, const QuenchSpec& spec);

struct Peak {
    std::int64_t index;
    double t;
    double value;
    double prominence;
};

/// Interior local maxima with at least the given absolute prominence.
std::vector<Peak> find_peaks(const std::vector<double>& ts, const std::vector<double>& ys,
                             double min_prominence);

struct RevivalResult {
    bool found = false;
    double t_star = 0.0;
    std::vector<Peak> peaks;
};

/// Time between the first and second qualifying peaks of a trace column.
RevivalResult revival_period(const QuenchTrace& trace, const std::string& column,
                             double min_prominence = 0.05);

/// Median gap between consecutive qualifying peaks (for oscillation periods).
RevivalResult oscillation_period(const QuenchTrace& trace, const std::string& column,
                                 double min_prominence = 0.02);

struct TowerParams {
    int member_count = 0;      // 0 = auto, 2 * floor(L/2) + 1
    double tau_max = 50.0;
    double dtau = 0.01;
    double seed_min_value = 0.02; // qualifying |<psi0|psi(tau)>|^2 peak height
};

struct TowerResult {
    bool found = false;
    double delta_e = 0.0; // median consecutive member spacing
    double e_star = 0.0;  // first positive member energy
    double seed = 0.0;
    std::vector<std::int64_t> members;
};

/// Scar-tower extraction: the window width is seeded by the first revival of
/// the fidelity amplitude sum_mu w_mu e^{-i E_mu tau}, then each window keeps
/// its maximum-overlap eigenstate.
TowerResult scar_tower_spacing(const EigenSystem& es, const Eigen::VectorXd& psi0, int rungs,
                               const TowerParams& params = {});

} // namespace pxp
