#include "pxp/operators.hpp"

#include <bit>
#include <cmath>

namespace pxp {

namespace {
using Triplets = std::vector<std::tuple<std::int64_t, std::int64_t, double>>;
}

SparseOperator build_hz(const Basis& basis, double delta) {
    const Geometry& geo = basis.geometry();
    Triplets trip;
    trip.reserve(static_cast<std::size_t>(basis.size()));
    for (std::int64_t i = 0; i < basis.size(); ++i) {
        const int m = staggered_magnetization(basis.state(i), geo);
        trip.emplace_back(i, i, -delta * m);
    }
    return SparseOperator::from_triplets(basis.size(), std::move(trip));
}

SparseOperator build_hx(const Basis& basis, double w) {
    const Geometry& geo = basis.geometry();
    Triplets trip;
    for (std::int64_t i = 0; i < basis.size(); ++i) {
        const FockState s = basis.state(i);
        for (int site = 0; site < geo.sites(); ++site) {
            if ((s & geo.neighbor_mask(site)) == 0) {
                const FockState t = s ^ (FockState{1} << site);
                trip.emplace_back(i, basis.index_of(t), -w);
            }
        }
    }
    return SparseOperator::from_triplets(basis.size(), std::move(trip));
}

SparseOperator build_hamiltonian(const Basis& basis, const ModelParams& params) {
    return build_hz(basis, params.delta) + build_hx(basis, params.w);
}

SparseOperator local_sigma_z(const Basis& basis, int j, int a) {
    const Geometry& geo = basis.geometry();
    const int site = geo.site_bit(j, a);
    Triplets trip;
    trip.reserve(static_cast<std::size_t>(basis.size()));
    for (std::int64_t i = 0; i < basis.size(); ++i) {
        const int b = static_cast<int>((basis.state(i) >> site) & 1);
        trip.emplace_back(i, i, 2.0 * b - 1.0);
    }
    return SparseOperator::from_triplets(basis.size(), std::move(trip));
}

SparseOperator local_sigma_x_tilde(const Basis& basis, int j, int a) {
    const Geometry& geo = basis.geometry();
    const int site = geo.site_bit(j, a);
    Triplets trip;
    for (std::int64_t i = 0; i < basis.size(); ++i) {
        const FockState s = basis.state(i);
        if ((s & geo.neighbor_mask(site)) == 0) {
            const FockState t = s ^ (FockState{1} << site);
            trip.emplace_back(i, basis.index_of(t), 1.0);
        }
    }
    return SparseOperator::from_triplets(basis.size(), std::move(trip));
}

namespace {

int imbalance_sign(Imbalance which, int j, int a) {
    switch (which) {
        case Imbalance::IzZ2: return ((j + a) % 2 == 0) ? +1 : -1;
        case Imbalance::IxZ2: return (a == 2) ? +1 : -1;
        case Imbalance::IxVac: return (j % 2 == 1) ? +1 : -1;
    }
    return 0;
}

} // namespace

SparseOperator build_imbalance(const Basis& basis, Imbalance which) {
    const Geometry& geo = basis.geometry();
    if (geo.legs() != 2)
        throw ConfigError("imbalance operators are defined on the ladder only");
    const int L = geo.rungs();
    Triplets trip;
    if (which == Imbalance::IzZ2) {
        for (std::int64_t i = 0; i < basis.size(); ++i) {
            const FockState s = basis.state(i);
            int acc = 0;
            for (int j = 1; j <= L; ++j)
                for (int a = 1; a <= 2; ++a) {
                    const int b = static_cast<int>((s >> geo.site_bit(j, a)) & 1);
                    acc += imbalance_sign(which, j, a) * (2 * b - 1);
                }
            trip.emplace_back(i, i, static_cast<double>(acc) / L);
        }
    } else {
        for (std::int64_t i = 0; i < basis.size(); ++i) {
            const FockState s = basis.state(i);
            for (int j = 1; j <= L; ++j)
                for (int a = 1; a <= 2; ++a) {
                    const int site = geo.site_bit(j, a);
                    if ((s & geo.neighbor_mask(site)) == 0) {
                        const FockState t = s ^ (FockState{1} << site);
                        trip.emplace_back(i, basis.index_of(t),
                                          static_cast<double>(imbalance_sign(which, j, a)) / L);
                    }
                }
        }
    }
    return SparseOperator::from_triplets(basis.size(), std::move(trip));
}

std::int64_t imbalance_trace_exact(const Basis& basis, Imbalance which) {
    const Geometry& geo = basis.geometry();
    if (which != Imbalance::IzZ2) return 0; // purely off-diagonal
    const int L = geo.rungs();
    std::int64_t tr = 0;
    for (std::int64_t i = 0; i < basis.size(); ++i) {
        const FockState s = basis.state(i);
        for (int j = 1; j <= L; ++j)
            for (int a = 1; a <= 2; ++a) {
                const int b = static_cast<int>((s >> geo.site_bit(j, a)) & 1);
                tr += imbalance_sign(which, j, a) * (2 * b - 1);
            }
    }
    return tr;
}

Eigen::VectorXd SymmetryMap::apply(const Eigen::VectorXd& x) const {
    Eigen::VectorXd y(dim());
    for (std::int64_t i = 0; i < dim(); ++i)
        y[perm[static_cast<std::size_t>(i)]] = sign[static_cast<std::size_t>(i)] * x[i];
    return y;
}

Eigen::VectorXcd SymmetryMap::apply(const Eigen::VectorXcd& x) const {
    Eigen::VectorXcd y(dim());
    for (std::int64_t i = 0; i < dim(); ++i)
        y[perm[static_cast<std::size_t>(i)]] =
            static_cast<double>(sign[static_cast<std::size_t>(i)]) * x[i];
    return y;
}

Eigen::MatrixXd SymmetryMap::dense() const {
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(dim(), dim());
    for (std::int64_t i = 0; i < dim(); ++i)
        M(perm[static_cast<std::size_t>(i)], i) = sign[static_cast<std::size_t>(i)];
    return M;
}

SymmetryMap SymmetryMap::inverse() const {
    SymmetryMap inv;
    inv.kind = kind;
    inv.perm.resize(perm.size());
    inv.sign.resize(sign.size());
    for (std::int64_t i = 0; i < dim(); ++i) {
        inv.perm[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] =
            static_cast<std::int32_t>(i);
        inv.sign[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] =
            sign[static_cast<std::size_t>(i)];
    }
    return inv;
}

SymmetryMap compose(const SymmetryMap& a, const SymmetryMap& b) {
    SymmetryMap c;
    c.kind = a.kind;
    c.perm.resize(b.perm.size());
    c.sign.resize(b.sign.size());
    for (std::size_t i = 0; i < b.perm.size(); ++i) {
        const auto mid = static_cast<std::size_t>(b.perm[i]);
        c.perm[i] = a.perm[mid];
        c.sign[i] = static_cast<std::int8_t>(b.sign[i] * a.sign[mid]);
    }
    return c;
}

SymmetryMap build_symmetry(const Basis& basis, SymmetryKind kind) {
    const Geometry& geo = basis.geometry();
    if (geo.legs() != 2 &&
        (kind == SymmetryKind::Ty || kind == SymmetryKind::Rx || kind == SymmetryKind::C2))
        throw ConfigError("leg symmetry needs the ladder geometry");

    const int n = geo.sites();
    auto chirality_sign = [&](FockState s) -> std::int8_t {
        const int down = n - std::popcount(s);
        return (down % 2 == 0) ? std::int8_t{1} : std::int8_t{-1};
    };

    SymmetryMap map;
    map.kind = kind;
    map.perm.resize(static_cast<std::size_t>(basis.size()));
    map.sign.resize(static_cast<std::size_t>(basis.size()));
    for (std::int64_t i = 0; i < basis.size(); ++i) {
        const FockState s = basis.state(i);
        FockState t = s;
        std::int8_t sg = 1;
        switch (kind) {
            case SymmetryKind::Tx: t = translate_x(s, geo); break;
            case SymmetryKind::Ty:
            case SymmetryKind::Rx: t = translate_y(s, geo); break;
            case SymmetryKind::C: sg = chirality_sign(s); break;
            case SymmetryKind::C1:
                t = translate_x(s, geo);
                sg = chirality_sign(s);
                break;
            case SymmetryKind::C2:
                t = translate_x(translate_y(s, geo), geo);
                sg = chirality_sign(s);
                break;
        }
        map.perm[static_cast<std::size_t>(i)] = static_cast<std::int32_t>(basis.index_of(t));
        map.sign[static_cast<std::size_t>(i)] = sg;
    }
    return map;
}

namespace {

// (H U)_{i,j} = H_{i,perm[j]} sign[j];  (U H)_{i,j} = sign[inv(i)] H_{inv(i),j}
double hu_uh_max(const SparseOperator& h, const SymmetryMap& u, double combine_sign) {
    const SymmetryMap inv = u.inverse();
    double worst = 0.0;
    for (std::int64_t i = 0; i < h.dim(); ++i) {
        const auto pi = static_cast<std::size_t>(inv.perm[static_cast<std::size_t>(i)]);
        for (std::int64_t j = 0; j < h.dim(); ++j) {
            const auto pj = static_cast<std::size_t>(u.perm[static_cast<std::size_t>(j)]);
            const double hu = h.entry(i, static_cast<std::int64_t>(pj)) *
                              u.sign[static_cast<std::size_t>(j)];
            const double uh = u.sign[pi] * h.entry(static_cast<std::int64_t>(pi), j);
            worst = std::max(worst, std::abs(hu + combine_sign * uh));
        }
    }
    return worst;
}

} // namespace

double anticommutator_max(const SparseOperator& h, const SymmetryMap& u) {
    return hu_uh_max(h, u, +1.0);
}

double commutator_max(const SparseOperator& h, const SymmetryMap& u) {
    return hu_uh_max(h, u, -1.0);
}

} // namespace pxp
