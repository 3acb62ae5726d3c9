#include "pxp/io.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <cstring>

#include "pxp/error.hpp"

namespace pxp {

std::string fmt_g12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string basis_export_string(const Basis& basis) {
    const int n = basis.geometry().sites();
    std::string out = "N=" + std::to_string(n) + " dim=" + std::to_string(basis.size()) + "\n";
    for (std::int64_t i = 0; i < basis.size(); ++i) {
        const FockState s = basis.state(i);
        for (int b = 0; b < n; ++b) out += ((s >> b) & 1) ? 'x' : '.';
        out += '\n';
    }
    return out;
}

namespace {

std::FILE* open_or_throw(const std::string& path, const char* mode) {
    std::FILE* f = std::fopen(path.c_str(), mode);
    if (!f) throw Error("cannot open '" + path + "'");
    return f;
}

} // namespace

void write_basis_export(const Basis& basis, const std::string& path) {
    std::FILE* f = open_or_throw(path, "w");
    const std::string s = basis_export_string(basis);
    std::fwrite(s.data(), 1, s.size(), f);
    std::fclose(f);
}

void write_operator_dump(const SparseOperator& op, const std::string& path) {
    std::FILE* f = open_or_throw(path, "w");
    std::fprintf(f, "dim=%" PRId64 " sym=%d\n", op.dim(), op.symmetric() ? 1 : 0);
    for (std::int64_t i = 0; i < op.dim(); ++i)
        for (std::int64_t k = op.row_ptr()[static_cast<std::size_t>(i)];
             k < op.row_ptr()[static_cast<std::size_t>(i) + 1]; ++k)
            std::fprintf(f, "%" PRId64 " %d %s\n", i, op.cols()[static_cast<std::size_t>(k)],
                         fmt_g12(op.values()[static_cast<std::size_t>(k)]).c_str());
    std::fclose(f);
}

namespace {

constexpr char kCacheMagic[8] = {'P', 'X', 'P', 'E', 'I', 'G', 'C', '1'};

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

} // namespace

std::string eigen_cache_path(const std::string& dir, const EigenCacheKey& key) {
    char keystr[160];
    std::snprintf(keystr, sizeof(keystr), "legs=%d L=%d delta=%.17g w=%.17g tol=%.17g", key.legs,
                  key.rungs, key.delta, key.w, key.tol_zero);
    char name[64];
    std::snprintf(name, sizeof(name), "eig-%016" PRIx64 ".bin", fnv1a(keystr));
    return dir + "/" + name;
}

void save_eigensystem(const EigenSystem& es, const EigenCacheKey& key, const std::string& path) {
    std::FILE* f = open_or_throw(path, "wb");
    std::fwrite(kCacheMagic, 1, sizeof(kCacheMagic), f);
    const std::int32_t legs = key.legs, rungs = key.rungs;
    const std::int64_t dim = es.dim();
    std::fwrite(&legs, sizeof(legs), 1, f);
    std::fwrite(&rungs, sizeof(rungs), 1, f);
    std::fwrite(&key.delta, sizeof(double), 1, f);
    std::fwrite(&key.w, sizeof(double), 1, f);
    std::fwrite(&dim, sizeof(dim), 1, f);
    std::fwrite(&es.tol_zero, sizeof(double), 1, f);
    std::fwrite(es.evals.data(), sizeof(double), static_cast<std::size_t>(dim), f);
    std::fwrite(es.evecs.data(), sizeof(double), static_cast<std::size_t>(dim * dim), f);
    std::fclose(f);
}

std::optional<EigenSystem> load_eigensystem(const EigenCacheKey& key, const std::string& path) {
    std::FILE* f = std::fopen(path.c_str(), "rb");
    if (!f) return std::nullopt;
    char magic[8];
    std::int32_t legs = 0, rungs = 0;
    std::int64_t dim = 0;
    double delta = 0, w = 0, tol = 0;
    bool ok = std::fread(magic, 1, 8, f) == 8 && std::memcmp(magic, kCacheMagic, 8) == 0 &&
              std::fread(&legs, sizeof(legs), 1, f) == 1 &&
              std::fread(&rungs, sizeof(rungs), 1, f) == 1 &&
              std::fread(&delta, sizeof(delta), 1, f) == 1 &&
              std::fread(&w, sizeof(w), 1, f) == 1 && std::fread(&dim, sizeof(dim), 1, f) == 1 &&
              std::fread(&tol, sizeof(tol), 1, f) == 1;
    ok = ok && legs == key.legs && rungs == key.rungs && delta == key.delta && w == key.w &&
         tol == key.tol_zero && dim > 0;
    if (!ok) {
        std::fclose(f);
        return std::nullopt;
    }
    EigenSystem es;
    es.tol_zero = tol;
    es.evals.resize(dim);
    es.evecs.resize(dim, dim);
    ok = std::fread(es.evals.data(), sizeof(double), static_cast<std::size_t>(dim), f) ==
             static_cast<std::size_t>(dim) &&
         std::fread(es.evecs.data(), sizeof(double), static_cast<std::size_t>(dim * dim), f) ==
             static_cast<std::size_t>(dim * dim);
    std::fclose(f);
    if (!ok) return std::nullopt;
    double above = 0.0;
    for (std::int64_t i = 0; i < dim; ++i) {
        const double e = std::abs(es.evals[i]);
        if (e < tol)
            es.zero_modes.push_back(i);
        else if (above == 0.0 || e < above)
            above = e;
    }
    es.smallest_above_tol = above;
    return es;
}

CsvWriter::CsvWriter(const std::string& path) : file_(open_or_throw(path, "w")) {}

CsvWriter::~CsvWriter() {
    if (file_) std::fclose(static_cast<std::FILE*>(file_));
}

void CsvWriter::header(const std::vector<std::string>& cols) { raw_row(cols); }

void CsvWriter::row(const std::vector<double>& vals) {
    std::vector<std::string> cells;
    cells.reserve(vals.size());
    for (double v : vals) cells.push_back(fmt_g12(v));
    raw_row(cells);
}

void CsvWriter::raw_row(const std::vector<std::string>& cells) {
    auto* f = static_cast<std::FILE*>(file_);
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) std::fputc(',', f);
        std::fputs(cells[i].c_str(), f);
    }
    std::fputc('\n', f);
}

} // namespace pxp
