#include "pxp/ensemble.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include <Eigen/Eigenvalues>

#include "pxp/error.hpp"

namespace pxp {

double thermal_beta0(const SparseOperator& a) {
    return a.trace() / static_cast<double>(a.dim());
}

DiagonalEnsembleResult diagonal_ensemble(const EigenSystem& es, const Eigen::VectorXd& psi0,
                                         const SparseOperator& a, double cluster_tol) {
    if (a.dim() != es.dim())
        throw Error("diagonal_ensemble: operator and eigensystem dimensions differ");
    DiagonalEnsembleResult res;
    std::int64_t i = 0;
    while (i < es.dim()) {
        std::int64_t j = i;
        while (j + 1 < es.dim() && std::abs(es.evals[j + 1] - es.evals[i]) < cluster_tol) ++j;
        const std::int64_t sz = j - i + 1;
        const Eigen::MatrixXd p = es.evecs.middleCols(i, sz);
        const Eigen::VectorXd w = p.transpose() * psi0;
        double val;
        if (sz == 1) {
            val = w[0] * w[0] * p.col(0).dot(a.apply(Eigen::VectorXd(p.col(0))));
        } else {
            // rotate the degenerate cluster so A is diagonal inside it
            const Eigen::MatrixXd small = p.transpose() * a.apply_dense(p);
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> rot(
                0.5 * (small + small.transpose()));
            const Eigen::VectorXd wr = rot.eigenvectors().transpose() * w;
            val = 0.0;
            for (std::int64_t q = 0; q < sz; ++q)
                val += wr[q] * wr[q] * rot.eigenvalues()[q];
        }
        if (std::abs(es.evals[i]) < es.tol_zero)
            res.zero_part += val;
        else
            res.nonzero_part += val;
        i = j + 1;
    }
    res.total = res.zero_part + res.nonzero_part;
    return res;
}

std::vector<SweepRow> imbalance_sweep(const Basis& basis, const std::vector<double>& deltas,
                                      int threads) {
    const Geometry& geo = basis.geometry();
    const SparseOperator iz = build_imbalance(basis, Imbalance::IzZ2);
    const SparseOperator ixz = build_imbalance(basis, Imbalance::IxZ2);
    const SparseOperator ixv = build_imbalance(basis, Imbalance::IxVac);
    Eigen::VectorXd z2 = Eigen::VectorXd::Zero(basis.size());
    z2[basis.index_of(named_state("Z2", geo))] = 1.0;
    Eigen::VectorXd vac = Eigen::VectorXd::Zero(basis.size());
    vac[basis.index_of(named_state("vac", geo))] = 1.0;

    std::vector<std::vector<SweepRow>> cells(deltas.size());
    std::exception_ptr first_error;
    std::mutex err_mutex;
    std::atomic<std::size_t> next{0};

    auto work = [&]() {
        for (;;) {
            const std::size_t k = next.fetch_add(1);
            if (k >= deltas.size()) return;
            try {
                const double delta = deltas[k];
                const EigenSystem es = diagonalize(build_hamiltonian(basis, {delta, 1.0}));
                auto row = [&](const char* op, const char* init, const SparseOperator& a,
                               const Eigen::VectorXd& psi) {
                    const DiagonalEnsembleResult r = diagonal_ensemble(es, psi, a);
                    cells[k].push_back({geo.sites(), delta, op, init, r.total, r.nonzero_part,
                                        r.zero_part});
                };
                row("Iz_Z2", "Z2", iz, z2);
                row("Ix_Z2", "Z2", ixz, z2);
                row("Ix_vac", "vac", ixv, vac);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };

    const int nthreads = std::max(1, std::min<int>(threads, static_cast<int>(deltas.size())));
    if (nthreads == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    if (first_error) std::rethrow_exception(first_error);

    std::vector<SweepRow> rows;
    for (auto& cell : cells)
        for (auto& r : cell) rows.push_back(std::move(r));
    return rows;
}

TimeAverageReport time_average_check(const std::vector<double>& ts,
                                     const std::vector<double>& series, double ensemble_value) {
    if (ts.size() != series.size() || ts.empty())
        throw Error("time_average_check: bad series");
    const double t_half = ts.back() / 2.0;
    double acc = 0.0;
    std::int64_t n = 0;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        if (ts[i] >= t_half) {
            acc += series[i];
            ++n;
        }
    }
    TimeAverageReport rep;
    rep.running_mean = acc / static_cast<double>(n);
    rep.ensemble_value = ensemble_value;
    rep.deviation = std::abs(rep.running_mean - ensemble_value);
    return rep;
}

} // namespace pxp
