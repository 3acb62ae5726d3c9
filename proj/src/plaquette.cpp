#include "pxp/plaquette.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

#include "pxp/error.hpp"

namespace pxp {
namespace plaquette {

namespace {
constexpr std::complex<double> kI{0.0, 1.0};

// which F states have site (j,a) excited, and which F pairs sigma~x_{j,a} connects
// site order: (1,1), (2,1), (1,2), (2,2)
constexpr int kSiteOf[4][2] = {{1, 1}, {2, 1}, {1, 2}, {2, 2}};
constexpr int kOccupied[4][2] = {{3, 6}, {4, 5}, {1, 5}, {2, 6}};
constexpr int kFlipPairs[4][2][2] = {
    {{0, 3}, {2, 6}}, // (1,1): F0<->F3, F2<->F6
    {{0, 4}, {1, 5}}, // (2,1): F0<->F4, F1<->F5
    {{0, 1}, {4, 5}}, // (1,2): F0<->F1, F4<->F5
    {{0, 2}, {3, 6}}, // (2,2): F0<->F2, F3<->F6
};
} // namespace

Matrix7 hamiltonian(double r) {
    if (r <= 0.0) throw ConfigError("plaquette coupling r must be positive");
    Matrix7 h = Matrix7::Zero();
    const double diag[7] = {0, -1, 1, -1, 1, 0, 0};
    for (int i = 0; i < 7; ++i) h(i, i) = diag[i];
    const int pairs[8][2] = {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 5}, {2, 6}, {3, 6}, {4, 5}};
    for (auto& p : pairs) {
        h(p[0], p[1]) = r;
        h(p[1], p[0]) = r;
    }
    return h;
}

AnalyticEigensystem analytic_eigensystem(double r) {
    if (r <= 0.0) throw ConfigError("plaquette coupling r must be positive");
    const double E1 = e1(r), E2 = e2(r);
    const double alpha = (E1 - 1.0) / (2.0 * r);
    const double beta = (E1 + 1.0) / (2.0 * r);
    const double alphap = (E2 - 1.0) / (2.0 * r);
    const double betap = (E2 + 1.0) / (2.0 * r);
    const double nrm = std::sqrt(2.0) * std::sqrt(2.0 + 1.0 / (r * r));
    const double nrmp = std::sqrt(2.0) * std::sqrt(6.0 + 1.0 / (r * r));

    Vector7 k0, k1, k2, p3, p4, p5, p6;
    k0 << 0, 0, -r, r, 0, 0, 1;
    k1 << -1, 0, r, -r, 0, 1, 0;
    k2 << -1.0 / r, -1, 1, -1, 1, 0, 0;
    p3 << 0, beta, -alpha, -beta, alpha, -1, 1;
    p4 << 0, -alpha, beta, alpha, -beta, -1, 1;
    p5 << 2, -betap, -alphap, -betap, -alphap, 1, 1;
    p6 << 2, alphap, betap, alphap, betap, 1, 1;

    // the printed kernel triple spans the kernel but is oblique; orthogonalize it
    k0.normalize();
    k1 -= k0.dot(k1) * k0;
    k1.normalize();
    k2 -= k0.dot(k2) * k0;
    k2 -= k1.dot(k2) * k1;
    k2.normalize();

    AnalyticEigensystem out;
    out.evals << -E2, -E1, 0, 0, 0, E1, E2;
    out.evecs.col(0) = p5 / nrmp;
    out.evecs.col(1) = p3 / nrm;
    out.evecs.col(2) = k0;
    out.evecs.col(3) = k1;
    out.evecs.col(4) = k2;
    out.evecs.col(5) = p4 / nrm;
    out.evecs.col(6) = p6 / nrmp;
    return out;
}

Vector7c z2_coefficients(double r, double t) {
    const double E1 = e1(r), E2 = e2(r);
    const double E1sq = E1 * E1, E2sq = E2 * E2;
    const double a1 = 1.0 / E1sq, a2 = 1.0 / E2sq;
    const double c1t = std::cos(E1 * t), c2t = std::cos(E2 * t);
    const double s1t = std::sin(E1 * t), s2t = std::sin(E2 * t);

    Vector7c c;
    c[0] = 2.0 * r * r * (c2t - 1.0) * a2;
    c[1] = 0.5 * r * ((1.0 - c1t) * a1 + (1.0 - c2t) * a2) - kI * 0.5 * r * (s1t / E1 + s2t / E2);
    c[2] = 0.5 * r * ((1.0 - c1t) * a1 - (1.0 - c2t) * a2) + kI * 0.5 * r * (s1t / E1 - s2t / E2);
    c[3] = -std::conj(c[2]);
    c[4] = -std::conj(c[1]);
    c[5] = 1.0 - 2.0 * r * r * (1.0 + 4.0 * r * r) / (E1sq * E2sq) +
           r * r * (c1t * a1 + c2t * a2);
    c[6] = 4.0 * std::pow(r, 4) / (E1sq * E2sq) + r * r * (-c1t * a1 + c2t * a2);
    return c;
}

Vector7c vac_coefficients(double r, double t) {
    const double E1 = e1(r), E2 = e2(r);
    const double E2sq = E2 * E2;
    const double th = E2 * t;
    const double u = 1.0 - std::cos(th);

    Vector7c d;
    d[0] = (E1 * E1 + 4.0 * r * r * std::cos(th)) / E2sq;
    d[1] = r * u / E2sq - kI * r * std::sin(th) / E2;
    d[2] = -std::conj(d[1]);
    d[3] = d[1];
    d[4] = d[2];
    d[5] = -2.0 * r * r * u / E2sq;
    d[6] = d[5];
    return d;
}

Vector7c propagate(double r, const Vector7& psi0, double t) {
    Eigen::SelfAdjointEigenSolver<Matrix7> solver(hamiltonian(r));
    const Vector7 c0 = solver.eigenvectors().transpose() * psi0;
    Vector7c out = Vector7c::Zero();
    for (int n = 0; n < 7; ++n)
        out += std::exp(-kI * solver.eigenvalues()[n] * t) * c0[n] *
               solver.eigenvectors().col(n).cast<std::complex<double>>();
    return out;
}

namespace {

SiteValues magnetizations_of(const Vector7c& amp) {
    SiteValues v{};
    for (int s = 0; s < 4; ++s) {
        double mz = -1.0;
        for (int f : kOccupied[s]) mz += 2.0 * std::norm(amp[f]);
        const int jj = kSiteOf[s][0], aa = kSiteOf[s][1];
        v.mz[static_cast<std::size_t>((jj - 1) * 2 + (aa - 1))] = mz;
        double mx = 0.0;
        for (auto& p : kFlipPairs[s])
            mx += 2.0 * std::real(std::conj(amp[p[0]]) * amp[p[1]]);
        v.mx[static_cast<std::size_t>((jj - 1) * 2 + (aa - 1))] = mx;
    }
    return v;
}

} // namespace

SiteValues magnetizations(double r, double t, PlaquetteInit init) {
    const Vector7c amp = (init == PlaquetteInit::Z2) ? z2_coefficients(r, t)
                                                     : vac_coefficients(r, t);
    return magnetizations_of(amp);
}

SteadyImbalances steady_imbalances(double r) {
    if (r <= 0.0) throw ConfigError("plaquette coupling r must be positive");
    const double E1sq = 1.0 + 2.0 * r * r, E2sq = 1.0 + 6.0 * r * r;
    SteadyImbalances s;
    s.iz_z2 = 2.0 * (1.0 + 5.0 * r * r) / (E1sq * E2sq);
    s.ix_z2 = r * std::pow(1.0 + 4.0 * r * r, 3) / (E1sq * E1sq * E2sq * E2sq);
    s.ix_vac = 2.0 * r * (1.0 + 4.0 * r * r) / (E2sq * E2sq);
    return s;
}

namespace {

// infinite-time average of <psi0| A |psi0> under the 7x7: keep only
// same-energy coherences (three-fold kernel plus the nondegenerate pairs)
double diag_ensemble_7(double r, const Vector7& psi0, const Matrix7& a) {
    Eigen::SelfAdjointEigenSolver<Matrix7> solver(hamiltonian(r));
    const Vector7& ev = solver.eigenvalues();
    const Matrix7& v = solver.eigenvectors();
    double tot = 0.0;
    int i = 0;
    while (i < 7) {
        int j = i;
        while (j + 1 < 7 && std::abs(ev[j + 1] - ev[i]) < 1e-9) ++j;
        const auto p = v.middleCols(i, j - i + 1);
        const Eigen::VectorXd w = p.transpose() * psi0;
        tot += w.dot(p.transpose() * a * p * w);
        i = j + 1;
    }
    return tot;
}

Matrix7 site_sz(int s) {
    Matrix7 m = -Matrix7::Identity();
    for (int f : kOccupied[s]) m(f, f) = 1.0;
    return m;
}

Matrix7 site_sx(int s) {
    Matrix7 m = Matrix7::Zero();
    for (auto& p : kFlipPairs[s]) {
        m(p[0], p[1]) = 1.0;
        m(p[1], p[0]) = 1.0;
    }
    return m;
}

} // namespace

SteadyImbalances steady_imbalances_numeric(double r) {
    Vector7 f5 = Vector7::Zero(), f0 = Vector7::Zero();
    f5[5] = 1.0;
    f0[0] = 1.0;
    // site order (1,1), (2,1), (1,2), (2,2)
    const Matrix7 iz = 0.5 * (-site_sz(0) + site_sz(1) + site_sz(2) - site_sz(3));
    const Matrix7 ixz = 0.5 * (-site_sx(0) + site_sx(1) - site_sx(2) + site_sx(3));
    const Matrix7 ixv = 0.5 * (site_sx(0) - site_sx(1) + site_sx(2) - site_sx(3));
    SteadyImbalances s;
    s.iz_z2 = diag_ensemble_7(r, f5, iz);
    s.ix_z2 = diag_ensemble_7(r, f5, ixz);
    s.ix_vac = diag_ensemble_7(r, f0, ixv);
    return s;
}

} // namespace plaquette
} // namespace pxp
