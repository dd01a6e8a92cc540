#pragma once

#include <iosfwd>
#include <vector>

namespace robinfem {

struct Triplet {
    int row = 0;
    int col = 0;
    double value = 0.0;
};

// Square CSR matrix with sorted column indices per row. Duplicate triplets are
// accumulated in insertion order, so assembling the same triplet stream always
// reproduces the matrix bit for bit.
struct SparseMatrix {
    int n = 0;
    std::vector<int> row_ptr;
    std::vector<int> cols;
    std::vector<double> vals;

    int nnz() const { return static_cast<int>(vals.size()); }
    bool all_zero() const;
    double max_abs() const;
    std::vector<double> diagonal() const;
    std::vector<Triplet> to_triplets() const;

    // debug dump: one `row col value` line per entry
    void write_coordinate(std::ostream& out) const;
};

SparseMatrix from_triplets(int n, std::vector<Triplet> triplets);

SparseMatrix identity(int n);

// A + B on the union pattern; per entry the A contribution is added first.
SparseMatrix add(const SparseMatrix& A, const SparseMatrix& B);

} // namespace robinfem
