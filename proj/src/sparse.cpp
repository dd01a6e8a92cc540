#include "robinfem/sparse.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace robinfem {

bool SparseMatrix::all_zero() const {
    for (double v : vals)
        if (v != 0.0) return false;
    return true;
}

double SparseMatrix::max_abs() const {
    double m = 0.0;
    for (double v : vals) m = std::max(m, std::abs(v));
    return m;
}

std::vector<double> SparseMatrix::diagonal() const {
    std::vector<double> d(n, 0.0);
    for (int r = 0; r < n; ++r)
        for (int k = row_ptr[r]; k < row_ptr[r + 1]; ++k)
            if (cols[k] == r) d[r] = vals[k];
    return d;
}

std::vector<Triplet> SparseMatrix::to_triplets() const {
    std::vector<Triplet> t;
    t.reserve(vals.size());
    for (int r = 0; r < n; ++r)
        for (int k = row_ptr[r]; k < row_ptr[r + 1]; ++k)
            t.push_back({r, cols[k], vals[k]});
    return t;
}

void SparseMatrix::write_coordinate(std::ostream& out) const {
    char buf[96];
    for (int r = 0; r < n; ++r)
        for (int k = row_ptr[r]; k < row_ptr[r + 1]; ++k) {
            std::snprintf(buf, sizeof(buf), "%d %d %.17g\n", r, cols[k], vals[k]);
            out << buf;
        }
}

SparseMatrix from_triplets(int n, std::vector<Triplet> triplets) {
    for (const Triplet& t : triplets)
        if (t.row < 0 || t.row >= n || t.col < 0 || t.col >= n)
            throw std::invalid_argument("triplet index out of range");

    // stable sort keeps same-cell contributions in insertion order
    std::stable_sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });

    SparseMatrix A;
    A.n = n;
    A.row_ptr.assign(n + 1, 0);
    std::size_t i = 0;
    while (i < triplets.size()) {
        const int r = triplets[i].row;
        const int c = triplets[i].col;
        double sum = 0.0;
        while (i < triplets.size() && triplets[i].row == r && triplets[i].col == c)
            sum += triplets[i++].value;
        A.cols.push_back(c);
        A.vals.push_back(sum);
        A.row_ptr[r + 1]++;
    }
    for (int r = 0; r < n; ++r) A.row_ptr[r + 1] += A.row_ptr[r];
    return A;
}

SparseMatrix identity(int n) {
    SparseMatrix I;
    I.n = n;
    I.row_ptr.resize(n + 1);
    I.cols.resize(n);
    I.vals.assign(n, 1.0);
    for (int r = 0; r <= n; ++r) I.row_ptr[r] = r;
    for (int r = 0; r < n; ++r) I.cols[r] = r;
    return I;
}

SparseMatrix add(const SparseMatrix& A, const SparseMatrix& B) {
    if (A.n != B.n) throw std::invalid_argument("matrix sum: dimension mismatch");
    SparseMatrix C;
    C.n = A.n;
    C.row_ptr.assign(A.n + 1, 0);
    C.cols.reserve(A.nnz() + B.nnz());
    C.vals.reserve(A.nnz() + B.nnz());
    for (int r = 0; r < A.n; ++r) {
        int ia = A.row_ptr[r], ea = A.row_ptr[r + 1];
        int ib = B.row_ptr[r], eb = B.row_ptr[r + 1];
        while (ia < ea || ib < eb) {
            const int ca = ia < ea ? A.cols[ia] : INT32_MAX;
            const int cb = ib < eb ? B.cols[ib] : INT32_MAX;
            if (ca < cb) {
                C.cols.push_back(ca);
                C.vals.push_back(A.vals[ia++]);
            } else if (cb < ca) {
                C.cols.push_back(cb);
                C.vals.push_back(B.vals[ib++]);
            } else {
                C.cols.push_back(ca);
                C.vals.push_back(A.vals[ia++] + B.vals[ib++]);
            }
        }
        C.row_ptr[r + 1] = static_cast<int>(C.cols.size());
    }
    return C;
}

} // namespace robinfem
