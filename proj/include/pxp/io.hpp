#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pxp/basis.hpp"
#include "pxp/sparse.hpp"
#include "pxp/spectra.hpp"

namespace pxp {

/// Fixed 12-significant-digit float formatting used by every data file.
std::string fmt_g12(double v);

/// One line per state as a string over {., x} in site-bit order, preceded by
/// a "N=<n> dim=<d>" header.
void write_basis_export(const Basis& basis, const std::string& path);
std::string basis_export_string(const Basis& basis);

/// Coordinate-format text dump: "dim=<d> sym=<0|1>" then "row col value" lines.
void write_operator_dump(const SparseOperator& op, const std::string& path);

/// Binary eigensystem cache. Header: magic, legs, L, delta, w, dim, tol_zero;
/// then eigenvalues and column-major eigenvectors as little-endian doubles.
struct EigenCacheKey {
    int legs = 2;
    int rungs = 2;
    double delta = 0.0;
    double w = 1.0;
    double tol_zero = 1e-8;
};

std::string eigen_cache_path(const std::string& dir, const EigenCacheKey& key);
void save_eigensystem(const EigenSystem& es, const EigenCacheKey& key, const std::string& path);
std::optional<EigenSystem> load_eigensystem(const EigenCacheKey& key, const std::string& path);

/// CSV writer with the fixed float format and no time-dependent content.
class CsvWriter {
  public:
    explicit CsvWriter(const std::string& path);
    ~CsvWriter();
    CsvWriter(const CsvWriter&) = delete;
    CsvWriter& operator=(const CsvWriter&) = delete;

    void header(const std::vector<std::string>& cols);
    void row(const std::vector<double>& vals);
    void raw_row(const std::vector<std::string>& cells);

  private:
    void* file_ = nullptr;
};

} // namespace pxp
