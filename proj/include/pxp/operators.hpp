#pragma once

#include <cstdint>
#include <vector>

#include "pxp/basis.hpp"
#include "pxp/sparse.hpp"

namespace pxp {

/// Staggered detuning Delta and coupling w of the ladder Hamiltonian
///   H = -Delta sum_{j,a} (-1)^j sigma^z_{j,a} - w sum_{j,a} sigma~x_{j,a},
/// time measured in units of hbar/w with w = 1.
struct ModelParams {
    double delta = 1.0;
    double w = 1.0;
};

/// Diagonal detuning term -Delta sum (-1)^j sigma^z.
SparseOperator build_hz(const Basis& basis, double delta);

/// Kinetic term -w sum sigma~x (one entry per unblocked single flip).
SparseOperator build_hx(const Basis& basis, double w);

SparseOperator build_hamiltonian(const Basis& basis, const ModelParams& params);

/// sigma^z at site (j, a), diagonal with entries +-1.
SparseOperator local_sigma_z(const Basis& basis, int j, int a);

/// Projected flip sigma~x at site (j, a): matrix element 1 between the two
/// states differing by the flip when all neighbors are down.
SparseOperator local_sigma_x_tilde(const Basis& basis, int j, int a);

enum class Imbalance { IzZ2, IxZ2, IxVac };

/// Imbalance operators of the two-rung cell, tiled over the ladder and
/// normalized by 1/L:
///   IzZ2:  sum (-1)^{j+a} sigma^z_{j,a} / L
///   IxZ2:  sum (a=1 ? -1 : +1) sigma~x_{j,a} / L
///   IxVac: sum (odd j ? +1 : -1) sigma~x_{j,a} / L
SparseOperator build_imbalance(const Basis& basis, Imbalance which);

/// Exact integer trace of an imbalance operator times L (0 for all three).
std::int64_t imbalance_trace_exact(const Basis& basis, Imbalance which);

enum class SymmetryKind { Tx, Ty, Rx, C, C1, C2 };

/// Signed permutation U with U|i> = sign[i] |perm[i]>.
struct SymmetryMap {
    SymmetryKind kind;
    std::vector<std::int32_t> perm;
    std::vector<std::int8_t> sign;

    std::int64_t dim() const { return static_cast<std::int64_t>(perm.size()); }
    Eigen::VectorXd apply(const Eigen::VectorXd& x) const;
    Eigen::VectorXcd apply(const Eigen::VectorXcd& x) const;
    Eigen::MatrixXd dense() const;
    SymmetryMap inverse() const;
};

/// Compose a after b: (a * b)|i> = a(b|i>).
SymmetryMap compose(const SymmetryMap& a, const SymmetryMap& b);

SymmetryMap build_symmetry(const Basis& basis, SymmetryKind kind);

/// max |(H U + U H)_{ij}|; exact cancellation gives 0.0 for chirality maps.
double anticommutator_max(const SparseOperator& h, const SymmetryMap& u);
double commutator_max(const SparseOperator& h, const SymmetryMap& u);

} // namespace pxp
