#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace pxp {

/// Real symmetric sparse matrix in row-compressed form.
class SparseOperator {
  public:
    SparseOperator() = default;

    /// Build from unsorted triplets; duplicate (row, col) entries are summed.
    static SparseOperator from_triplets(std::int64_t dim,
                                        std::vector<std::tuple<std::int64_t, std::int64_t, double>> trip,
                                        bool symmetric = true);

    std::int64_t dim() const { return dim_; }
    std::int64_t nnz() const { return static_cast<std::int64_t>(val_.size()); }
    bool symmetric() const { return symmetric_; }

    double entry(std::int64_t i, std::int64_t j) const;
    double trace() const;
    double max_abs() const;

    void apply(const double* x, double* y) const;            // y = A x
    Eigen::VectorXd apply(const Eigen::VectorXd& x) const;
    Eigen::VectorXcd apply(const Eigen::VectorXcd& x) const;
    void apply_add(const Eigen::VectorXcd& x, std::complex<double> alpha,
                   Eigen::VectorXcd& y) const;               // y += alpha A x

    double expectation(const Eigen::VectorXcd& psi) const;
    double expectation(const Eigen::VectorXd& psi) const;

    Eigen::MatrixXd dense() const;
    Eigen::MatrixXd apply_dense(const Eigen::MatrixXd& X) const; // A X, column block

    const std::vector<std::int64_t>& row_ptr() const { return row_ptr_; }
    const std::vector<std::int32_t>& cols() const { return col_; }
    const std::vector<double>& values() const { return val_; }

  private:
    std::int64_t dim_ = 0;
    bool symmetric_ = true;
    std::vector<std::int64_t> row_ptr_;
    std::vector<std::int32_t> col_;
    std::vector<double> val_;
};

SparseOperator operator+(const SparseOperator& a, const SparseOperator& b);

} // namespace pxp
