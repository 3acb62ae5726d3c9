#include "pxp/entanglement.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "pxp/error.hpp"

namespace pxp {

namespace {

FockState compress(FockState state, const std::vector<int>& sites) {
    FockState out = 0;
    for (std::size_t k = 0; k < sites.size(); ++k)
        out |= ((state >> sites[k]) & 1) << k;
    return out;
}

} // namespace

Bipartition build_bipartition(const Basis& basis, Cut kind) {
    const Geometry& geo = basis.geometry();
    Bipartition bip;
    bip.kind = kind;
    if (kind == Cut::Parallel) {
        if (geo.legs() != 2)
            throw ConfigError("parallel cut needs the ladder; the chain supports only perpendicular");
        for (int j = 1; j <= geo.rungs(); ++j) bip.a_sites.push_back(geo.site_bit(j, 1));
        for (int j = 1; j <= geo.rungs(); ++j) bip.b_sites.push_back(geo.site_bit(j, 2));
    } else {
        if (geo.rungs() % 2 != 0)
            throw ConfigError("perpendicular cut needs even L");
        for (int j = 1; j <= geo.rungs() / 2; ++j)
            for (int a = 1; a <= geo.legs(); ++a) bip.a_sites.push_back(geo.site_bit(j, a));
        for (int j = geo.rungs() / 2 + 1; j <= geo.rungs(); ++j)
            for (int a = 1; a <= geo.legs(); ++a) bip.b_sites.push_back(geo.site_bit(j, a));
    }

    std::vector<FockState> acf, bcf;
    acf.reserve(static_cast<std::size_t>(basis.size()));
    bcf.reserve(static_cast<std::size_t>(basis.size()));
    for (std::int64_t i = 0; i < basis.size(); ++i) {
        acf.push_back(compress(basis.state(i), bip.a_sites));
        bcf.push_back(compress(basis.state(i), bip.b_sites));
    }
    bip.a_configs = acf;
    bip.b_configs = bcf;
    for (auto* v : {&bip.a_configs, &bip.b_configs}) {
        std::sort(v->begin(), v->end());
        v->erase(std::unique(v->begin(), v->end()), v->end());
    }
    bip.factor.reserve(static_cast<std::size_t>(basis.size()));
    for (std::int64_t i = 0; i < basis.size(); ++i) {
        const auto ia = std::lower_bound(bip.a_configs.begin(), bip.a_configs.end(),
                                         acf[static_cast<std::size_t>(i)]) -
                        bip.a_configs.begin();
        const auto ib = std::lower_bound(bip.b_configs.begin(), bip.b_configs.end(),
                                         bcf[static_cast<std::size_t>(i)]) -
                        bip.b_configs.begin();
        bip.factor.emplace_back(static_cast<std::int32_t>(ia), static_cast<std::int32_t>(ib));
    }
    return bip;
}

Eigen::MatrixXcd reduced_density(const Eigen::VectorXcd& psi, const Bipartition& bip) {
    if (psi.size() != static_cast<std::int64_t>(bip.factor.size()))
        throw Error("reduced_density: state size does not match the bipartition");
    Eigen::MatrixXcd amp = Eigen::MatrixXcd::Zero(bip.dim_a(), bip.dim_b());
    for (std::size_t i = 0; i < bip.factor.size(); ++i)
        amp(bip.factor[i].first, bip.factor[i].second) = psi[static_cast<std::int64_t>(i)];
    return amp * amp.adjoint();
}

double vn_entropy(const Eigen::MatrixXcd& rho) {
    const double tr = rho.trace().real();
    if (std::abs(tr - 1.0) > 1e-8)
        throw NumericalError("vn_entropy: trace deviates from 1 by " +
                             std::to_string(std::abs(tr - 1.0)));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho);
    double s = 0.0;
    for (std::int64_t i = 0; i < solver.eigenvalues().size(); ++i) {
        double p = solver.eigenvalues()[i];
        if (p < -1e-10)
            throw NumericalError("vn_entropy: negative eigenvalue " + std::to_string(p));
        if (p <= 0.0) continue;
        s -= p * std::log(p);
    }
    return s;
}

} // namespace pxp
