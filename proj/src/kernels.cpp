#include "robinfem/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace robinfem {

namespace {
constexpr std::int64_t kDotBlock = 1024;
} // namespace

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
    const std::int64_t n = static_cast<std::int64_t>(a.size());
    const std::int64_t blocks = (n + kDotBlock - 1) / kDotBlock;
    std::vector<double> partial(static_cast<std::size_t>(blocks), 0.0);
#pragma omp parallel for schedule(static)
    for (std::int64_t blk = 0; blk < blocks; ++blk) {
        const std::int64_t lo = blk * kDotBlock;
        const std::int64_t hi = std::min(n, lo + kDotBlock);
        double s = 0.0;
        for (std::int64_t i = lo; i < hi; ++i) s += a[i] * b[i];
        partial[blk] = s;
    }
    double total = 0.0;
    for (double s : partial) total += s;
    return total;
}

double norm2(const std::vector<double>& x) { return std::sqrt(dot(x, x)); }

void axpy(double alpha, const std::vector<double>& x, std::vector<double>& y) {
    if (x.size() != y.size()) throw std::invalid_argument("axpy: size mismatch");
    const std::int64_t n = static_cast<std::int64_t>(x.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void scal(double alpha, std::vector<double>& x) {
    const std::int64_t n = static_cast<std::int64_t>(x.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) x[i] *= alpha;
}

void spmv(const SparseMatrix& A, const std::vector<double>& x, std::vector<double>& y) {
    if (static_cast<int>(x.size()) != A.n) throw std::invalid_argument("spmv: size mismatch");
    y.resize(A.n);
#pragma omp parallel for schedule(static)
    for (int r = 0; r < A.n; ++r) {
        double s = 0.0;
        for (int k = A.row_ptr[r]; k < A.row_ptr[r + 1]; ++k) s += A.vals[k] * x[A.cols[k]];
        y[r] = s;
    }
}

std::vector<double> spmv(const SparseMatrix& A, const std::vector<double>& x) {
    std::vector<double> y;
    spmv(A, x, y);
    return y;
}

namespace serial {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

void axpy(double alpha, const std::vector<double>& x, std::vector<double>& y) {
    for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

void spmv(const SparseMatrix& A, const std::vector<double>& x, std::vector<double>& y) {
    y.resize(A.n);
    for (int r = 0; r < A.n; ++r) {
        double s = 0.0;
        for (int k = A.row_ptr[r]; k < A.row_ptr[r + 1]; ++k) s += A.vals[k] * x[A.cols[k]];
        y[r] = s;
    }
}

} // namespace serial

} // namespace robinfem
