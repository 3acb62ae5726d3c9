#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "pxp/sparse.hpp"

namespace pxp {

/// Dense symmetric eigendecomposition with the zero-mode subspace identified.
struct EigenSystem {
    Eigen::VectorXd evals;   // ascending
    Eigen::MatrixXd evecs;   // orthonormal columns
    std::vector<std::int64_t> zero_modes; // indices with |E| < tol_zero
    double tol_zero = 1e-8;
    double smallest_above_tol = 0.0; // spectral gap diagnostic around zero

    std::int64_t dim() const { return evals.size(); }
    std::int64_t kernel_dim() const { return static_cast<std::int64_t>(zero_modes.size()); }
    Eigen::MatrixXd kernel_basis() const;
};

inline constexpr std::int64_t kDefaultDiagonalizeCap = 40000;

EigenSystem diagonalize(const SparseOperator& h, double tol_zero = 1e-8,
                        std::int64_t cap = kDefaultDiagonalizeCap);

/// Orthonormal kernel vectors (columns).
Eigen::MatrixXd zero_subspace(const EigenSystem& es);

struct RotatedZeroModes {
    Eigen::MatrixXd vectors; // same span as the input kernel
    Eigen::VectorXd diag;    // diagonal of A in the rotated basis
};

/// Rotate an orthonormal kernel basis so that A becomes diagonal within it.
RotatedZeroModes rotate_zero_modes(const Eigen::MatrixXd& kernel, const SparseOperator& a);

struct SimultaneousZeroModes {
    std::int64_t count = 0;
    Eigen::MatrixXd vectors; // orthonormal, annihilated by both Hz and Hx
    std::int64_t support_dim = 0;
};

/// Joint kernel of the diagonal Hz and of Hx: restrict to Fock states with
/// zero staggered magnetization and take the SVD null space of the Hx columns
/// on that support (cutoff 1e-10 * sigma_max).
SimultaneousZeroModes simultaneous_zero_modes(const SparseOperator& hz, const SparseOperator& hx);

/// Shannon entropy -sum p log p of one normalized vector in the Fock basis.
double shannon_entropy(const Eigen::VectorXd& v);
double shannon_entropy(const Eigen::VectorXcd& v);

/// S1 of every eigenvector.
Eigen::VectorXd shannon_per_eigenstate(const EigenSystem& es);

} // namespace pxp
