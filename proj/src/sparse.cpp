#include "pxp/sparse.hpp"

#include <algorithm>
#include <cmath>

#include "pxp/error.hpp"

namespace pxp {

SparseOperator SparseOperator::from_triplets(
    std::int64_t dim, std::vector<std::tuple<std::int64_t, std::int64_t, double>> trip,
    bool symmetric) {
    std::sort(trip.begin(), trip.end(), [](const auto& a, const auto& b) {
        if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
        return std::get<1>(a) < std::get<1>(b);
    });
    SparseOperator op;
    op.dim_ = dim;
    op.symmetric_ = symmetric;
    op.row_ptr_.assign(static_cast<std::size_t>(dim) + 1, 0);
    op.col_.reserve(trip.size());
    op.val_.reserve(trip.size());
    std::size_t k = 0;
    for (std::int64_t r = 0; r < dim; ++r) {
        while (k < trip.size() && std::get<0>(trip[k]) == r) {
            const std::int64_t c = std::get<1>(trip[k]);
            double v = std::get<2>(trip[k]);
            ++k;
            while (k < trip.size() && std::get<0>(trip[k]) == r && std::get<1>(trip[k]) == c) {
                v += std::get<2>(trip[k]);
                ++k;
            }
            if (v != 0.0) {
                op.col_.push_back(static_cast<std::int32_t>(c));
                op.val_.push_back(v);
            }
        }
        op.row_ptr_[static_cast<std::size_t>(r) + 1] = static_cast<std::int64_t>(op.col_.size());
    }
    return op;
}

double SparseOperator::entry(std::int64_t i, std::int64_t j) const {
    for (std::int64_t k = row_ptr_[static_cast<std::size_t>(i)];
         k < row_ptr_[static_cast<std::size_t>(i) + 1]; ++k) {
        if (col_[static_cast<std::size_t>(k)] == j) return val_[static_cast<std::size_t>(k)];
    }
    return 0.0;
}

double SparseOperator::trace() const {
    double t = 0.0;
    for (std::int64_t i = 0; i < dim_; ++i) t += entry(i, i);
    return t;
}

double SparseOperator::max_abs() const {
    double m = 0.0;
    for (double v : val_) m = std::max(m, std::abs(v));
    return m;
}

void SparseOperator::apply(const double* x, double* y) const {
    for (std::int64_t i = 0; i < dim_; ++i) {
        double acc = 0.0;
        for (std::int64_t k = row_ptr_[static_cast<std::size_t>(i)];
             k < row_ptr_[static_cast<std::size_t>(i) + 1]; ++k)
            acc += val_[static_cast<std::size_t>(k)] * x[col_[static_cast<std::size_t>(k)]];
        y[i] = acc;
    }
}

Eigen::VectorXd SparseOperator::apply(const Eigen::VectorXd& x) const {
    Eigen::VectorXd y(dim_);
    apply(x.data(), y.data());
    return y;
}

Eigen::VectorXcd SparseOperator::apply(const Eigen::VectorXcd& x) const {
    Eigen::VectorXcd y = Eigen::VectorXcd::Zero(dim_);
    apply_add(x, 1.0, y);
    return y;
}

void SparseOperator::apply_add(const Eigen::VectorXcd& x, std::complex<double> alpha,
                               Eigen::VectorXcd& y) const {
    for (std::int64_t i = 0; i < dim_; ++i) {
        std::complex<double> acc = 0.0;
        for (std::int64_t k = row_ptr_[static_cast<std::size_t>(i)];
             k < row_ptr_[static_cast<std::size_t>(i) + 1]; ++k)
            acc += val_[static_cast<std::size_t>(k)] * x[col_[static_cast<std::size_t>(k)]];
        y[i] += alpha * acc;
    }
}

double SparseOperator::expectation(const Eigen::VectorXcd& psi) const {
    std::complex<double> acc = 0.0;
    for (std::int64_t i = 0; i < dim_; ++i) {
        std::complex<double> row = 0.0;
        for (std::int64_t k = row_ptr_[static_cast<std::size_t>(i)];
             k < row_ptr_[static_cast<std::size_t>(i) + 1]; ++k)
            row += val_[static_cast<std::size_t>(k)] * psi[col_[static_cast<std::size_t>(k)]];
        acc += std::conj(psi[i]) * row;
    }
    return acc.real();
}

double SparseOperator::expectation(const Eigen::VectorXd& psi) const {
    return psi.dot(apply(psi));
}

Eigen::MatrixXd SparseOperator::dense() const {
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(dim_, dim_);
    for (std::int64_t i = 0; i < dim_; ++i)
        for (std::int64_t k = row_ptr_[static_cast<std::size_t>(i)];
             k < row_ptr_[static_cast<std::size_t>(i) + 1]; ++k)
            M(i, col_[static_cast<std::size_t>(k)]) = val_[static_cast<std::size_t>(k)];
    return M;
}

Eigen::MatrixXd SparseOperator::apply_dense(const Eigen::MatrixXd& X) const {
    if (X.rows() != dim_) throw Error("sparse apply: dimension mismatch");
    Eigen::MatrixXd Y = Eigen::MatrixXd::Zero(dim_, X.cols());
    for (std::int64_t i = 0; i < dim_; ++i)
        for (std::int64_t k = row_ptr_[static_cast<std::size_t>(i)];
             k < row_ptr_[static_cast<std::size_t>(i) + 1]; ++k)
            Y.row(i) += val_[static_cast<std::size_t>(k)] * X.row(col_[static_cast<std::size_t>(k)]);
    return Y;
}

SparseOperator operator+(const SparseOperator& a, const SparseOperator& b) {
    if (a.dim() != b.dim()) throw Error("sparse add: dimension mismatch");
    std::vector<std::tuple<std::int64_t, std::int64_t, double>> trip;
    trip.reserve(static_cast<std::size_t>(a.nnz() + b.nnz()));
    for (const SparseOperator* op : {&a, &b}) {
        for (std::int64_t i = 0; i < op->dim(); ++i)
            for (std::int64_t k = op->row_ptr()[static_cast<std::size_t>(i)];
                 k < op->row_ptr()[static_cast<std::size_t>(i) + 1]; ++k)
                trip.emplace_back(i, op->cols()[static_cast<std::size_t>(k)],
                                  op->values()[static_cast<std::size_t>(k)]);
    }
    return SparseOperator::from_triplets(a.dim(), std::move(trip),
                                         a.symmetric() && b.symmetric());
}

} // namespace pxp
