#include "doctest.h"

#include <cmath>

#include "pxp/operators.hpp"
#include "pxp/spectra.hpp"

using namespace pxp;

TEST_CASE("eigensystem invariants at N=8") {
    Basis b(Geometry::ladder(4));
    const SparseOperator h = build_hamiltonian(b, {0.5, 1.0});
    const EigenSystem es = diagonalize(h);

    SUBCASE("orthonormal columns and diagonal V^T H V") {
        const Eigen::MatrixXd vtv = es.evecs.transpose() * es.evecs;
        CHECK((vtv - Eigen::MatrixXd::Identity(es.dim(), es.dim())).cwiseAbs().maxCoeff() < 1e-9);
        Eigen::MatrixXd vthv = es.evecs.transpose() * h.dense() * es.evecs;
        for (std::int64_t i = 0; i < es.dim(); ++i) vthv(i, i) -= es.evals[i];
        CHECK(vthv.cwiseAbs().maxCoeff() < 1e-9);
    }
    SUBCASE("residuals") {
        for (std::int64_t i = 0; i < es.dim(); ++i) {
            const Eigen::VectorXd v = es.evecs.col(i);
            const double r = (h.apply(v) - es.evals[i] * v).norm();
            CHECK(r <= 1e-9 * h.max_abs() * static_cast<double>(es.dim()));
        }
    }
    SUBCASE("spectral reflection") {
        for (std::int64_t i = 0; i < es.dim(); ++i)
            CHECK(std::abs(es.evals[i] + es.evals[es.dim() - 1 - i]) < 1e-9);
    }
    SUBCASE("chirality maps eigenvectors to partners with flipped energy") {
        const SymmetryMap c1 = build_symmetry(b, SymmetryKind::C1);
        for (std::int64_t i = 0; i < es.dim(); ++i) {
            if (std::abs(es.evals[i]) < es.tol_zero) continue;
            const Eigen::VectorXd u = c1.apply(Eigen::VectorXd(es.evecs.col(i)));
            CHECK((h.apply(u) + es.evals[i] * u).norm() < 1e-8);
        }
    }
}

TEST_CASE("diagonalizing a diagonal operator returns its sorted diagonal") {
    Basis b(Geometry::ladder(4));
    const SparseOperator hz = build_hz(b, 1.0);
    std::vector<double> diag;
    for (std::int64_t i = 0; i < b.size(); ++i) diag.push_back(hz.entry(i, i));
    std::sort(diag.begin(), diag.end());
    const EigenSystem es = diagonalize(hz);
    for (std::int64_t i = 0; i < es.dim(); ++i)
        CHECK(es.evals[i] == doctest::Approx(diag[static_cast<std::size_t>(i)]).epsilon(1e-12));
}

TEST_CASE("dimension cap raises a capacity error") {
    Basis b(Geometry::ladder(4));
    const SparseOperator h = build_hamiltonian(b, {1.0, 1.0});
    CHECK_THROWS_AS(diagonalize(h, 1e-8, 10), CapacityError);
}

TEST_CASE("kernel dimension is Delta-independent") {
    const std::vector<std::pair<int, std::int64_t>> expected = {{2, 3}, {4, 9}, {6, 25}};
    for (auto [L, kdim] : expected) {
        Basis b(Geometry::ladder(L));
        for (double delta : {0.3, 0.9}) {
            const EigenSystem es = diagonalize(build_hamiltonian(b, {delta, 1.0}));
            CHECK(es.kernel_dim() == kdim);
            // kernel orthogonal to every nonzero mode
            const Eigen::MatrixXd z = es.kernel_basis();
            for (std::int64_t i = 0; i < es.dim(); ++i) {
                if (std::abs(es.evals[i]) < es.tol_zero) continue;
                CHECK((z.transpose() * es.evecs.col(i)).cwiseAbs().maxCoeff() < 1e-9);
            }
        }
    }
}

TEST_CASE("rotate_zero_modes diagonalizes the operator and keeps the projector") {
    Basis b(Geometry::ladder(6));
    const EigenSystem es = diagonalize(build_hamiltonian(b, {1.0, 1.0}));
    const Eigen::MatrixXd z = zero_subspace(es);
    const SparseOperator iz = build_imbalance(b, Imbalance::IzZ2);
    const RotatedZeroModes rot = rotate_zero_modes(z, iz);

    const Eigen::MatrixXd a_rot = rot.vectors.transpose() * iz.apply_dense(rot.vectors);
    for (std::int64_t i = 0; i < a_rot.rows(); ++i)
        for (std::int64_t j = 0; j < a_rot.cols(); ++j)
            if (i != j) CHECK(std::abs(a_rot(i, j)) < 1e-9);

    const Eigen::MatrixXd p_before = z * z.transpose();
    const Eigen::MatrixXd p_after = rot.vectors * rot.vectors.transpose();
    CHECK((p_before - p_after).cwiseAbs().maxCoeff() < 1e-9);

    // trace of the kernel-projected operator is rotation invariant
    const Eigen::MatrixXd small = z.transpose() * iz.apply_dense(z);
    CHECK(rot.diag.sum() == doctest::Approx(small.trace()).epsilon(1e-12));
    // and for IzZ2 on N=12 its value is zero within 1e-9
    CHECK(std::abs(rot.diag.sum()) < 1e-9);
}

TEST_CASE("rotate_zero_modes with the identity gives unit diagonal") {
    Basis b(Geometry::ladder(4));
    const EigenSystem es = diagonalize(build_hamiltonian(b, {0.5, 1.0}));
    std::vector<std::tuple<std::int64_t, std::int64_t, double>> trip;
    for (std::int64_t i = 0; i < b.size(); ++i) trip.emplace_back(i, i, 1.0);
    const SparseOperator id = SparseOperator::from_triplets(b.size(), std::move(trip));
    const RotatedZeroModes rot = rotate_zero_modes(zero_subspace(es), id);
    for (std::int64_t i = 0; i < rot.diag.size(); ++i)
        CHECK(rot.diag[i] == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("simultaneous zero modes: counts, vectors, Delta independence") {
    const std::vector<std::pair<int, std::int64_t>> expected = {{2, 1}, {4, 3}, {6, 6}};
    for (auto [L, n0] : expected) {
        Basis b(Geometry::ladder(L));
        const SparseOperator hz = build_hz(b, 1.0);
        const SparseOperator hx = build_hx(b, 1.0);
        const SimultaneousZeroModes sz = simultaneous_zero_modes(hz, hx);
        CHECK(sz.count == n0);
        for (double delta : {0.1, 0.5, 1.0}) {
            const SparseOperator h = build_hamiltonian(b, {delta, 1.0});
            for (std::int64_t c = 0; c < sz.count; ++c)
                CHECK(h.apply(Eigen::VectorXd(sz.vectors.col(c))).norm() < 1e-8);
        }
    }
}

TEST_CASE("the N=4 anomalous zero mode is (F0 - F5 - F6)/sqrt(3)") {
    Basis b(Geometry::ladder(2));
    const SimultaneousZeroModes sz =
        simultaneous_zero_modes(build_hz(b, 1.0), build_hx(b, 1.0));
    REQUIRE(sz.count == 1);
    Eigen::VectorXd expect = Eigen::VectorXd::Zero(7);
    expect[b.index_of(0)] = 1.0;        // F0 = vacuum
    expect[b.index_of(0b0110)] = -1.0;  // {(1,2),(2,1)}
    expect[b.index_of(0b1001)] = -1.0;  // {(1,1),(2,2)}
    expect /= std::sqrt(3.0);
    const Eigen::VectorXd got = sz.vectors.col(0);
    const double match = std::min((got - expect).norm(), (got + expect).norm());
    CHECK(match < 1e-12);
}

TEST_CASE("shannon entropy") {
    Eigen::VectorXd fock = Eigen::VectorXd::Zero(7);
    fock[3] = 1.0;
    CHECK(shannon_entropy(fock) == 0.0);
    const Eigen::VectorXd flat = Eigen::VectorXd::Constant(7, 1.0 / std::sqrt(7.0));
    CHECK(shannon_entropy(flat) == doctest::Approx(std::log(7.0)).epsilon(1e-12));
}

TEST_CASE("anomalous zero modes are more localized than typical kernel states") {
    Basis b(Geometry::ladder(6));
    const EigenSystem es = diagonalize(build_hamiltonian(b, {0.5, 1.0}));
    const Eigen::MatrixXd z = es.kernel_basis();
    double kernel_mean = 0.0;
    for (std::int64_t c = 0; c < z.cols(); ++c)
        kernel_mean += shannon_entropy(Eigen::VectorXd(z.col(c)));
    kernel_mean /= static_cast<double>(z.cols());

    const SimultaneousZeroModes sz =
        simultaneous_zero_modes(build_hz(b, 1.0), build_hx(b, 1.0));
    double anom_mean = 0.0;
    for (std::int64_t c = 0; c < sz.count; ++c)
        anom_mean += shannon_entropy(Eigen::VectorXd(sz.vectors.col(c)));
    anom_mean /= static_cast<double>(sz.count);

    CHECK(anom_mean < kernel_mean);
}
