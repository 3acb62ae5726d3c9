#pragma once

#include <array>
#include <complex>

#include <Eigen/Dense>

namespace pxp {
namespace plaquette {

/// Closed-form solution of the single 4-site plaquette in the 7-state Fock
/// basis F0..F6 (F0 vacuum; F1..F4 single excitations at (1,2), (2,2), (1,1),
/// (2,1); F5 = {(1,2),(2,1)}; F6 = {(1,1),(2,2)}), parametrized by
/// r = w / (2 Delta). The Hamiltonian is measured in units of 2 Delta.
/// Self-contained on purpose: it serves as the independent oracle for the
/// full engine at N = 4.

using Matrix7 = Eigen::Matrix<double, 7, 7>;
using Vector7 = Eigen::Matrix<double, 7, 1>;
using Vector7c = Eigen::Matrix<std::complex<double>, 7, 1>;

inline double e1(double r) { return std::sqrt(1.0 + 2.0 * r * r); }
inline double e2(double r) { return std::sqrt(1.0 + 6.0 * r * r); }

Matrix7 hamiltonian(double r);

struct AnalyticEigensystem {
    Vector7 evals;  // ascending: -E2, -E1, 0, 0, 0, E1, E2
    Matrix7 evecs;  // orthonormal columns (kernel Gram-Schmidt orthogonalized)
};

AnalyticEigensystem analytic_eigensystem(double r);

/// Quench coefficients c_alpha(t) from |F5> and d_alpha(t) from |F0>,
/// exact closed forms (unitary for all t).
Vector7c z2_coefficients(double r, double t);
Vector7c vac_coefficients(double r, double t);

/// Numeric propagator (eigendecomposition of the 7x7): the in-module oracle.
Vector7c propagate(double r, const Vector7& psi0, double t);

enum class PlaquetteInit { Z2, Vac };

struct SiteValues {
    // index (j-1)*2 + (a-1) for site (j, a), j = 1..2, a = 1..2
    std::array<double, 4> mz;
    std::array<double, 4> mx;
};

/// Site-resolved magnetizations at time t, evaluated from the closed-form
/// coefficients.
SiteValues magnetizations(double r, double t, PlaquetteInit init);

struct SteadyImbalances {
    double iz_z2;
    double ix_z2;
    double ix_vac;
};

/// Printed closed forms: iz = 2(1+5r^2)/(E1^2 E2^2),
/// ix_z2 = r(1+4r^2)^3/(E1^4 E2^4), ix_vac = 2r(1+4r^2)/(1+6r^2)^2.
SteadyImbalances steady_imbalances(double r);

/// Infinite-time averages of the imbalance combinations evaluated on the
/// exact plaquette dynamics (diagonal ensemble over the 7x7):
///   iz_z2  from |F5>, cell signs +(1,2) +(2,1) -(1,1) -(2,2), /L with L = 2;
///   ix_z2  from |F5>, rung signs +(j=2) -(j=1), /L;
///   ix_vac from |F0>, rung signs +(j=1) -(j=2), /L.
SteadyImbalances steady_imbalances_numeric(double r);

} // namespace plaquette
} // namespace pxp
