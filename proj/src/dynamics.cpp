#include "pxp/dynamics.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>

#include "pxp/entanglement.hpp"
#include "pxp/error.hpp"

namespace pxp {

namespace {
constexpr std::complex<double> kI{0.0, 1.0};
}

std::int64_t QuenchTrace::column_index(const std::string& name) const {
    for (std::size_t i = 0; i < columns.size(); ++i)
        if (columns[i] == name) return static_cast<std::int64_t>(i);
    throw Error("trace has no column '" + name + "'");
}

std::vector<double> QuenchTrace::series(const std::string& name) const {
    const auto c = static_cast<std::size_t>(column_index(name));
    std::vector<double> out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.push_back(r[c]);
    return out;
}

Rk4Diagnostics evolve_rk4(const SparseOperator& h, const Eigen::VectorXcd& psi0, double t_max,
                          double dt, double stride, const StateSink& sink,
                          double norm_drift_budget) {
    if (dt <= 0.0 || stride <= 0.0 || t_max < 0.0)
        throw ConfigError("evolve_rk4 needs positive dt and stride, t_max >= 0");
    const auto steps_per_sample = std::max<std::int64_t>(1, std::llround(stride / dt));
    const double dt_used = stride / static_cast<double>(steps_per_sample);
    const auto samples = static_cast<std::int64_t>(std::floor(t_max / stride + 0.5 * dt_used));

    Eigen::VectorXcd psi = psi0;
    Eigen::VectorXcd k1(psi.size()), k2(psi.size()), k3(psi.size()), k4(psi.size()),
        tmp(psi.size());
    const double e0 = h.expectation(psi0);

    Rk4Diagnostics diag;
    diag.dt_used = dt_used;
    sink(0.0, psi);
    for (std::int64_t s = 1; s <= samples; ++s) {
        for (std::int64_t q = 0; q < steps_per_sample; ++q) {
            k1.setZero();
            h.apply_add(psi, -kI, k1);
            tmp = psi + (0.5 * dt_used) * k1;
            k2.setZero();
            h.apply_add(tmp, -kI, k2);
            tmp = psi + (0.5 * dt_used) * k2;
            k3.setZero();
            h.apply_add(tmp, -kI, k3);
            tmp = psi + dt_used * k3;
            k4.setZero();
            h.apply_add(tmp, -kI, k4);
            psi += (dt_used / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
            ++diag.steps;
        }
        diag.max_energy_drift = std::max(diag.max_energy_drift,
                                         std::abs(h.expectation(psi) - e0));
        sink(static_cast<double>(s) * stride, psi);
    }
    diag.final_norm_deviation = std::abs(psi.norm() - 1.0);
    if (diag.final_norm_deviation > norm_drift_budget)
        throw NumericalError("RK4 norm drift " + std::to_string(diag.final_norm_deviation) +
                             " exceeds the budget; use a smaller dt");
    return diag;
}

void evolve_eigenbasis(const EigenSystem& es, const Eigen::VectorXcd& psi0,
                       const std::vector<double>& times, const StateSink& sink) {
    const Eigen::VectorXcd c0 = es.evecs.transpose() * psi0;
    Eigen::VectorXcd phased(c0.size());
    for (double t : times) {
        for (std::int64_t n = 0; n < c0.size(); ++n)
            phased[n] = std::exp(-kI * es.evals[n] * t) * c0[n];
        const Eigen::VectorXcd psi = es.evecs * phased;
        sink(t, psi);
    }
}

double rk4_convergence_probe(const SparseOperator& h, const Eigen::VectorXcd& psi0,
                             double t_probe, double dt) {
    Eigen::VectorXcd coarse, fine;
    auto keep = [](Eigen::VectorXcd& dst) {
        return [&dst](double, const Eigen::VectorXcd& psi) { dst = psi; };
    };
    evolve_rk4(h, psi0, t_probe, dt, t_probe, keep(coarse), 1.0);
    evolve_rk4(h, psi0, t_probe, dt / 2.0, t_probe, keep(fine), 1.0);
    return (coarse - fine).cwiseAbs().maxCoeff();
}

double measure_fidelity(const Eigen::VectorXcd& psi, const Eigen::VectorXcd& psi0) {
    return std::norm(psi0.dot(psi));
}

double measure_overlap(const Eigen::VectorXcd& psi, const Eigen::VectorXcd& phi) {
    return std::norm(phi.dot(psi));
}

ObservableSet::ObservableSet(const Basis& basis)
    : dim_(basis.size()), n_sites_(basis.geometry().sites()) {
    occupied_.resize(static_cast<std::size_t>(n_sites_));
    flips_.resize(static_cast<std::size_t>(n_sites_));
    mz_density_value_.resize(static_cast<std::size_t>(dim_));
    const Geometry& geo = basis.geometry();
    for (std::int64_t i = 0; i < dim_; ++i) {
        const FockState s = basis.state(i);
        mz_density_value_[static_cast<std::size_t>(i)] =
            (2.0 * std::popcount(s) - n_sites_) / n_sites_;
        for (int site = 0; site < n_sites_; ++site) {
            if ((s >> site) & 1)
                occupied_[static_cast<std::size_t>(site)].push_back(
                    static_cast<std::int32_t>(i));
            if ((s & geo.neighbor_mask(site)) == 0) {
                const FockState t = s ^ (FockState{1} << site);
                if (t > s)
                    flips_[static_cast<std::size_t>(site)].emplace_back(
                        static_cast<std::int32_t>(i),
                        static_cast<std::int32_t>(basis.index_of(t)));
            }
        }
    }
}

SiteMagnetizations ObservableSet::site_magnetizations(const Eigen::VectorXcd& psi) const {
    SiteMagnetizations out;
    out.mz.resize(static_cast<std::size_t>(n_sites_));
    out.mx.resize(static_cast<std::size_t>(n_sites_));
    const double nrm2 = psi.squaredNorm();
    for (int site = 0; site < n_sites_; ++site) {
        double occ = 0.0;
        for (std::int32_t i : occupied_[static_cast<std::size_t>(site)])
            occ += std::norm(psi[i]);
        out.mz[static_cast<std::size_t>(site)] = 2.0 * occ - nrm2;
        double mx = 0.0;
        for (auto [i, j] : flips_[static_cast<std::size_t>(site)])
            mx += 2.0 * std::real(std::conj(psi[i]) * psi[j]);
        out.mx[static_cast<std::size_t>(site)] = mx;
    }
    return out;
}

double ObservableSet::mz_density(const Eigen::VectorXcd& psi) const {
    double acc = 0.0;
    for (std::int64_t i = 0; i < dim_; ++i)
        acc += mz_density_value_[static_cast<std::size_t>(i)] * std::norm(psi[i]);
    return acc;
}

QuenchTrace run_quench(const Basis& basis, const QuenchSpec& spec) {
    const Geometry& geo = basis.geometry();
    const SparseOperator h = build_hamiltonian(basis, {spec.delta, spec.w});
    const FockState init_mask = named_state(spec.init, geo);
    Eigen::VectorXcd psi0 = Eigen::VectorXcd::Zero(basis.size());
    psi0[basis.index_of(init_mask)] = 1.0;

    const ObservableSet obs(basis);
    std::vector<std::pair<std::string, std::int64_t>> overlap_targets;
    for (const auto& name : spec.overlaps)
        overlap_targets.emplace_back(name, basis.index_of(named_state(name, geo)));

    QuenchTrace trace;
    trace.columns = {"t", "fidelity", "shannon", "mz_density"};
    for (const auto& [name, idx] : overlap_targets) trace.columns.push_back("overlap_" + name);
    if (spec.site_observables) {
        for (int j = 1; j <= geo.rungs(); ++j)
            for (int a = 1; a <= geo.legs(); ++a)
                trace.columns.push_back("mz_" + std::to_string(j) + "_" + std::to_string(a));
        for (int j = 1; j <= geo.rungs(); ++j)
            for (int a = 1; a <= geo.legs(); ++a)
                trace.columns.push_back("mx_" + std::to_string(j) + "_" + std::to_string(a));
    }
    std::optional<Bipartition> par, perp;
    if (spec.entanglement) {
        if (geo.legs() == 2) par = build_bipartition(basis, Cut::Parallel);
        perp = build_bipartition(basis, Cut::Perpendicular);
        if (par) trace.columns.push_back("svn_par");
        trace.columns.push_back("svn_perp");
    }

    const std::int64_t init_index = basis.index_of(init_mask);
    auto sample = [&](double t, const Eigen::VectorXcd& psi) {
        std::vector<double> row;
        row.reserve(trace.columns.size());
        row.push_back(t);
        row.push_back(std::norm(psi[init_index]));
        row.push_back(shannon_entropy(psi));
        row.push_back(obs.mz_density(psi));
        for (const auto& [name, idx] : overlap_targets) row.push_back(std::norm(psi[idx]));
        if (spec.site_observables) {
            const SiteMagnetizations m = obs.site_magnetizations(psi);
            for (int j = 1; j <= geo.rungs(); ++j)
                for (int a = 1; a <= geo.legs(); ++a)
                    row.push_back(m.mz[static_cast<std::size_t>(geo.site_bit(j, a))]);
            for (int j = 1; j <= geo.rungs(); ++j)
                for (int a = 1; a <= geo.legs(); ++a)
                    row.push_back(m.mx[static_cast<std::size_t>(geo.site_bit(j, a))]);
        }
        if (spec.entanglement) {
            if (par) row.push_back(vn_entropy(reduced_density(psi, *par)));
            row.push_back(vn_entropy(reduced_density(psi, *perp)));
        }
        trace.rows.push_back(std::move(row));
    };

    if (spec.method == EvolveMethod::Rk4) {
        const Rk4Diagnostics diag =
            evolve_rk4(h, psi0, spec.t_max, spec.dt, spec.stride, sample, spec.norm_drift_budget);
        trace.final_norm_deviation = diag.final_norm_deviation;
        trace.max_energy_drift = diag.max_energy_drift;
        trace.dt_used = diag.dt_used;
    } else {
        const EigenSystem es = diagonalize(h);
        std::vector<double> times;
        const auto samples = static_cast<std::int64_t>(std::floor(spec.t_max / spec.stride + 1e-9));
        for (std::int64_t s = 0; s <= samples; ++s)
            times.push_back(static_cast<double>(s) * spec.stride);
        evolve_eigenbasis(es, psi0, times, sample);
        trace.dt_used = spec.stride;
    }
    return trace;
}

std::vector<Peak> find_peaks(const std::vector<double>& ts, const std::vector<double>& ys,
                             double min_prominence) {
    std::vector<Peak> out;
    const std::int64_t n = static_cast<std::int64_t>(ys.size());
    for (std::int64_t i = 1; i + 1 < n; ++i) {
        if (!(ys[static_cast<std::size_t>(i)] >= ys[static_cast<std::size_t>(i - 1)] &&
              ys[static_cast<std::size_t>(i)] > ys[static_cast<std::size_t>(i + 1)]))
            continue;
        const double y = ys[static_cast<std::size_t>(i)];
        double lo_left = y;
        for (std::int64_t j = i; j >= 0 && ys[static_cast<std::size_t>(j)] <= y; --j)
            lo_left = std::min(lo_left, ys[static_cast<std::size_t>(j)]);
        double lo_right = y;
        for (std::int64_t j = i; j < n && ys[static_cast<std::size_t>(j)] <= y; ++j)
            lo_right = std::min(lo_right, ys[static_cast<std::size_t>(j)]);
        const double prom = y - std::max(lo_left, lo_right);
        if (prom >= min_prominence)
            out.push_back({i, ts[static_cast<std::size_t>(i)], y, prom});
    }
    return out;
}

RevivalResult revival_period(const QuenchTrace& trace, const std::string& column,
                             double min_prominence) {
    RevivalResult res;
    res.peaks = find_peaks(trace.times(), trace.series(column), min_prominence);
    if (res.peaks.size() < 2) return res;
    res.found = true;
    res.t_star = res.peaks[1].t - res.peaks[0].t;
    return res;
}

RevivalResult oscillation_period(const QuenchTrace& trace, const std::string& column,
                                 double min_prominence) {
    RevivalResult res;
    res.peaks = find_peaks(trace.times(), trace.series(column), min_prominence);
    if (res.peaks.size() < 2) return res;
    std::vector<double> gaps;
    for (std::size_t i = 1; i < res.peaks.size(); ++i)
        gaps.push_back(res.peaks[i].t - res.peaks[i - 1].t);
    std::sort(gaps.begin(), gaps.end());
    res.found = true;
    res.t_star = gaps[gaps.size() / 2];
    return res;
}

TowerResult scar_tower_spacing(const EigenSystem& es, const Eigen::VectorXd& psi0, int rungs,
                               const TowerParams& params) {
    TowerResult res;
    const Eigen::VectorXd c = es.evecs.transpose() * psi0;
    const Eigen::VectorXd w = c.cwiseProduct(c);

    // first revival of the fidelity amplitude seeds the window width
    std::vector<double> taus, fid;
    for (double tau = 0.0; tau <= params.tau_max; tau += params.dtau) taus.push_back(tau);
    fid.reserve(taus.size());
    for (double tau : taus) {
        std::complex<double> phi = 0.0;
        for (std::int64_t n = 0; n < w.size(); ++n)
            phi += w[n] * std::exp(-kI * es.evals[n] * tau);
        fid.push_back(std::norm(phi));
    }
    const std::vector<Peak> revivals = find_peaks(taus, fid, params.seed_min_value);
    if (revivals.empty()) return res; // flat overlap profile: no tower
    res.seed = 2.0 * M_PI / revivals.front().t;

    const int m = params.member_count > 0 ? params.member_count : 2 * (rungs / 2) + 1;
    std::vector<std::int64_t> members;
    for (int k = -(m / 2); k <= m / 2; ++k) {
        const double center = k * res.seed;
        std::int64_t best = -1;
        for (std::int64_t n = 0; n < es.dim(); ++n) {
            if (std::abs(es.evals[n] - center) > res.seed / 2.0) continue;
            if (best < 0 || w[n] > w[best]) best = n;
        }
        if (best >= 0 && w[best] > 0.0) members.push_back(best);
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (members.size() < 3) return res;

    std::vector<double> gaps;
    for (std::size_t i = 1; i < members.size(); ++i)
        gaps.push_back(es.evals[members[i]] - es.evals[members[i - 1]]);
    std::sort(gaps.begin(), gaps.end());
    res.delta_e = gaps[gaps.size() / 2];
    res.members = std::move(members);
    res.e_star = 0.0;
    for (std::int64_t n : res.members) {
        const double e = es.evals[n];
        if (e > es.tol_zero && (res.e_star == 0.0 || e < res.e_star)) res.e_star = e;
    }
    res.found = true;
    return res;
}

} // namespace pxp
