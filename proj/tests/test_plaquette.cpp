#include "doctest.h"

#include <cmath>

#include <Eigen/Eigenvalues>

#include "pxp/plaquette.hpp"

using namespace pxp::plaquette;

TEST_CASE("plaquette matrix: symmetry and r->0 spectrum") {
    const Matrix7 h = hamiltonian(0.5);
    CHECK((h - h.transpose()).cwiseAbs().maxCoeff() == 0.0);

    const Matrix7 h0 = hamiltonian(1e-9);
    Eigen::SelfAdjointEigenSolver<Matrix7> s(h0);
    const std::vector<double> expect = {-1, -1, 0, 0, 0, 1, 1};
    for (int i = 0; i < 7; ++i)
        CHECK(s.eigenvalues()[i] == doctest::Approx(expect[static_cast<std::size_t>(i)]).epsilon(1e-6));
}

TEST_CASE("numeric spectrum at r=1/2 is {+-sqrt1.5, +-sqrt2.5, 0,0,0}") {
    Eigen::SelfAdjointEigenSolver<Matrix7> s(hamiltonian(0.5));
    const double e1 = std::sqrt(1.5), e2 = std::sqrt(2.5);
    const std::vector<double> expect = {-e2, -e1, 0, 0, 0, e1, e2};
    for (int i = 0; i < 7; ++i)
        CHECK(std::abs(s.eigenvalues()[i] - expect[static_cast<std::size_t>(i)]) < 1e-12);
}

TEST_CASE("analytic eigensystem: orthonormal, residuals < 1e-12 across r") {
    for (double r : {0.05, 0.1, 0.25, 0.3, 0.5, 1.0, 2.0, 5.0}) {
        const AnalyticEigensystem ae = analytic_eigensystem(r);
        const Matrix7 h = hamiltonian(r);
        const Matrix7 gram = ae.evecs.transpose() * ae.evecs;
        CHECK((gram - Matrix7::Identity()).cwiseAbs().maxCoeff() < 1e-12);
        for (int n = 0; n < 7; ++n) {
            const Vector7 res = h * ae.evecs.col(n) - ae.evals[n] * ae.evecs.col(n);
            CHECK(res.norm() < 1e-12);
        }
        // analytic spectrum equals the numeric diagonalization
        Eigen::SelfAdjointEigenSolver<Matrix7> s(h);
        for (int n = 0; n < 7; ++n)
            CHECK(std::abs(ae.evals[n] - s.eigenvalues()[n]) < 1e-12);
    }
}

TEST_CASE("alpha * beta = 1/2 identity") {
    for (double r : {0.1, 0.7, 3.0}) {
        const double alpha = (e1(r) - 1.0) / (2.0 * r);
        const double beta = (e1(r) + 1.0) / (2.0 * r);
        CHECK(alpha * beta == doctest::Approx(0.5).epsilon(1e-12));
    }
}

TEST_CASE("closed-form coefficients match numeric propagation and are unitary") {
    Vector7 f5 = Vector7::Zero(), f0 = Vector7::Zero();
    f5[5] = 1.0;
    f0[0] = 1.0;
    for (double r : {0.1, 0.5, 2.0}) {
        for (double t : {0.0, 0.7, 5.3, 20.0, 50.0}) {
            const Vector7c c = z2_coefficients(r, t);
            const Vector7c d = vac_coefficients(r, t);
            CHECK(std::abs(c.squaredNorm() - 1.0) < 1e-10);
            CHECK(std::abs(d.squaredNorm() - 1.0) < 1e-10);
            CHECK((c - propagate(r, f5, t)).cwiseAbs().maxCoeff() < 1e-6);
            CHECK((d - propagate(r, f0, t)).cwiseAbs().maxCoeff() < 1e-6);
        }
    }
}

TEST_CASE("initial conditions: c5(0) = 1 and d0(0) = 1") {
    const Vector7c c = z2_coefficients(0.5, 0.0);
    CHECK(std::abs(c[5] - 1.0) < 1e-14);
    for (int a : {0, 1, 2, 3, 4, 6}) CHECK(std::abs(c[a]) < 1e-14);
    const Vector7c d = vac_coefficients(0.5, 0.0);
    CHECK(std::abs(d[0] - 1.0) < 1e-14);
}

TEST_CASE("steady imbalance closed forms") {
    SUBCASE("values at r = 1/2") {
        const SteadyImbalances s = steady_imbalances(0.5);
        CHECK(s.iz_z2 == doctest::Approx(1.2).epsilon(1e-12));
        CHECK(s.ix_z2 == doctest::Approx(4.0 / 14.0625).epsilon(1e-12));
        CHECK(s.ix_vac == doctest::Approx(0.32).epsilon(1e-12));
    }
    SUBCASE("r -> 0 limit of iz is 2") {
        CHECK(std::abs(steady_imbalances(1e-4).iz_z2 - 2.0) < 1e-6);
    }
    SUBCASE("large-r decay exponents") {
        const SteadyImbalances a = steady_imbalances(1e3);
        const SteadyImbalances b = steady_imbalances(1e4);
        CHECK(a.ix_z2 * 1e3 == doctest::Approx(b.ix_z2 * 1e4).epsilon(1e-4));
        CHECK(a.iz_z2 * 1e6 == doctest::Approx(b.iz_z2 * 1e8).epsilon(1e-4));
    }
}

TEST_CASE("longitudinal steady imbalance agrees with the exact dynamics at all r") {
    // the transverse printed forms do not reproduce the bare-plaquette
    // dynamics (they descend from the multi-plaquette trial state); the
    // longitudinal one does, exactly
    for (double r : {0.05, 0.25, 0.5, 1.0, 2.0}) {
        const SteadyImbalances closed = steady_imbalances(r);
        const SteadyImbalances numeric = steady_imbalances_numeric(r);
        CHECK(numeric.iz_z2 == doctest::Approx(closed.iz_z2).epsilon(1e-10));
    }
}

TEST_CASE("exact numeric steady imbalances at r = 1/2") {
    const SteadyImbalances n = steady_imbalances_numeric(0.5);
    CHECK(n.iz_z2 == doctest::Approx(1.2).epsilon(1e-10));
    CHECK(n.ix_z2 == doctest::Approx(32.0 / 75.0).epsilon(1e-10));  // 0.426666...
    CHECK(n.ix_vac == doctest::Approx(0.56).epsilon(1e-10));
}

TEST_CASE("magnetization sign relations hold identically in t") {
    for (double r : {0.3, 0.5, 1.5}) {
        for (double t : {0.0, 1.1, 7.7, 23.0}) {
            const SiteValues z2 = magnetizations(r, t, PlaquetteInit::Z2);
            // site order (1,1), (1,2), (2,1), (2,2) at indices 0, 1, 2, 3
            CHECK(z2.mx[0] == doctest::Approx(-z2.mx[3]).epsilon(1e-12)); // (1,1) = -(2,2)
            CHECK(z2.mx[1] == doctest::Approx(-z2.mx[2]).epsilon(1e-12)); // (1,2) = -(2,1)
            CHECK(z2.mz[0] == doctest::Approx(z2.mz[3]).epsilon(1e-12));
            CHECK(z2.mz[1] == doctest::Approx(z2.mz[2]).epsilon(1e-12));

            const SiteValues v = magnetizations(r, t, PlaquetteInit::Vac);
            CHECK(v.mz[0] == doctest::Approx(v.mz[1]).epsilon(1e-12));
            CHECK(v.mz[0] == doctest::Approx(v.mz[2]).epsilon(1e-12));
            CHECK(v.mz[0] == doctest::Approx(v.mz[3]).epsilon(1e-12));
            CHECK(v.mx[0] == doctest::Approx(v.mx[1]).epsilon(1e-12));  // same rung
            CHECK(v.mx[0] == doctest::Approx(-v.mx[2]).epsilon(1e-12)); // opposite rung
            CHECK(v.mx[0] == doctest::Approx(-v.mx[3]).epsilon(1e-12));
        }
    }
}

TEST_CASE("Z2 start has no transverse coherence at t = 0") {
    const SiteValues z2 = magnetizations(0.5, 0.0, PlaquetteInit::Z2);
    for (double m : z2.mx) CHECK(std::abs(m) < 1e-14);
}
