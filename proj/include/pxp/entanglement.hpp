#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "pxp/basis.hpp"

namespace pxp {

enum class Cut { Parallel, Perpendicular };

/// Bipartition of the sites with subsystem bases built from the
/// sub-configurations that actually occur across the constrained basis.
/// Parallel: A = leg 1; perpendicular: A = rungs 1 .. L/2.
struct Bipartition {
    Cut kind;
    std::vector<int> a_sites; // site bits of subsystem A, in compression order
    std::vector<int> b_sites;
    std::vector<FockState> a_configs; // sorted occurring sub-configurations
    std::vector<FockState> b_configs;
    std::vector<std::pair<std::int32_t, std::int32_t>> factor; // basis index -> (ia, ib)

    std::int64_t dim_a() const { return static_cast<std::int64_t>(a_configs.size()); }
    std::int64_t dim_b() const { return static_cast<std::int64_t>(b_configs.size()); }
};

Bipartition build_bipartition(const Basis& basis, Cut kind);

/// rho_A = Tr_B |psi><psi| over the occurring A-configurations.
Eigen::MatrixXcd reduced_density(const Eigen::VectorXcd& psi, const Bipartition& bip);

/// -Tr rho log rho (natural log); eigenvalues in [-1e-10, 0) are clipped to 0.
double vn_entropy(const Eigen::MatrixXcd& rho);

} // namespace pxp
