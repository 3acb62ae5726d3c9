#include "pxp/spectra.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "pxp/error.hpp"

namespace pxp {

Eigen::MatrixXd EigenSystem::kernel_basis() const {
    Eigen::MatrixXd z(evecs.rows(), kernel_dim());
    for (std::int64_t c = 0; c < kernel_dim(); ++c)
        z.col(c) = evecs.col(zero_modes[static_cast<std::size_t>(c)]);
    return z;
}

EigenSystem diagonalize(const SparseOperator& h, double tol_zero, std::int64_t cap) {
    if (h.dim() > cap)
        throw CapacityError("dimension " + std::to_string(h.dim()) +
                            " exceeds the diagonalization cap " + std::to_string(cap) +
                            "; use smaller N or a momentum sector");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h.dense());
    if (solver.info() != Eigen::Success)
        throw NumericalError("eigendecomposition failed to converge");
    EigenSystem es;
    es.evals = solver.eigenvalues();
    es.evecs = solver.eigenvectors();
    es.tol_zero = tol_zero;
    double above = 0.0;
    for (std::int64_t i = 0; i < es.dim(); ++i) {
        const double e = std::abs(es.evals[i]);
        if (e < tol_zero)
            es.zero_modes.push_back(i);
        else if (above == 0.0 || e < above)
            above = e;
    }
    es.smallest_above_tol = above;
    return es;
}

Eigen::MatrixXd zero_subspace(const EigenSystem& es) { return es.kernel_basis(); }

RotatedZeroModes rotate_zero_modes(const Eigen::MatrixXd& kernel, const SparseOperator& a) {
    RotatedZeroModes out;
    if (kernel.cols() == 0) {
        out.vectors = kernel;
        out.diag = Eigen::VectorXd();
        return out;
    }
    const Eigen::MatrixXd ak = a.apply_dense(kernel);
    const Eigen::MatrixXd small = kernel.transpose() * ak;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(0.5 * (small + small.transpose()));
    out.vectors = kernel * solver.eigenvectors();
    out.diag = solver.eigenvalues();
    return out;
}

SimultaneousZeroModes simultaneous_zero_modes(const SparseOperator& hz,
                                              const SparseOperator& hx) {
    const std::int64_t dim = hx.dim();
    std::vector<std::int64_t> support;
    for (std::int64_t i = 0; i < dim; ++i)
        if (hz.entry(i, i) == 0.0) support.push_back(i);

    SimultaneousZeroModes out;
    out.support_dim = static_cast<std::int64_t>(support.size());
    if (support.empty()) return out;

    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, out.support_dim);
    {
        Eigen::MatrixXd cols = Eigen::MatrixXd::Zero(dim, out.support_dim);
        for (std::int64_t c = 0; c < out.support_dim; ++c)
            cols(support[static_cast<std::size_t>(c)], c) = 1.0;
        m = hx.apply_dense(cols);
    }
    Eigen::BDCSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeThinV);
    const Eigen::VectorXd sv = svd.singularValues();
    const double cut = (sv.size() > 0 ? sv[0] : 0.0) * 1e-10;
    std::vector<std::int64_t> null_cols;
    for (std::int64_t i = 0; i < sv.size(); ++i)
        if (sv[i] <= cut) null_cols.push_back(i);

    out.count = static_cast<std::int64_t>(null_cols.size());
    out.vectors = Eigen::MatrixXd::Zero(dim, out.count);
    for (std::int64_t c = 0; c < out.count; ++c) {
        const Eigen::VectorXd x = svd.matrixV().col(null_cols[static_cast<std::size_t>(c)]);
        for (std::int64_t r = 0; r < out.support_dim; ++r)
            out.vectors(support[static_cast<std::size_t>(r)], c) = x[r];
    }
    return out;
}

double shannon_entropy(const Eigen::VectorXd& v) {
    double s = 0.0;
    for (std::int64_t i = 0; i < v.size(); ++i) {
        const double p = v[i] * v[i];
        if (p > 0.0) s -= p * std::log(p);
    }
    return s;
}

double shannon_entropy(const Eigen::VectorXcd& v) {
    double s = 0.0;
    for (std::int64_t i = 0; i < v.size(); ++i) {
        const double p = std::norm(v[i]);
        if (p > 0.0) s -= p * std::log(p);
    }
    return s;
}

Eigen::VectorXd shannon_per_eigenstate(const EigenSystem& es) {
    Eigen::VectorXd out(es.dim());
    for (std::int64_t i = 0; i < es.dim(); ++i) out[i] = shannon_entropy(Eigen::VectorXd(es.evecs.col(i)));
    return out;
}

} // namespace pxp
