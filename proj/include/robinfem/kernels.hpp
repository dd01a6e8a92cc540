#pragma once

#include <vector>

#include "robinfem/sparse.hpp"

namespace robinfem {

// Hot vector/matrix kernels, OpenMP-parallel. All of them produce results that
// are independent of the thread count: spmv and axpy write disjoint outputs
// with unchanged per-element arithmetic, and dot reduces over fixed-size
// blocks that are combined in block order. The plain-loop counterparts in
// robinfem::serial are kept as references for tests and benchmarks.

double dot(const std::vector<double>& a, const std::vector<double>& b);
double norm2(const std::vector<double>& x);

// y += alpha * x
void axpy(double alpha, const std::vector<double>& x, std::vector<double>& y);
void scal(double alpha, std::vector<double>& x);

// y = A x
void spmv(const SparseMatrix& A, const std::vector<double>& x, std::vector<double>& y);
std::vector<double> spmv(const SparseMatrix& A, const std::vector<double>& x);

namespace serial {
double dot(const std::vector<double>& a, const std::vector<double>& b);
void axpy(double alpha, const std::vector<double>& x, std::vector<double>& y);
void spmv(const SparseMatrix& A, const std::vector<double>& x, std::vector<double>& y);
} // namespace serial

} // namespace robinfem
