#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "robinfem/sparse.hpp"

namespace robinfem {

struct SolveStats {
    int iterations = 0;
    double final_residual = 0.0; // relative to ||b||
    bool converged = false;
};

class SolveFailure : public std::runtime_error {
public:
    SolveFailure(const std::string& what, SolveStats s) : std::runtime_error(what), stats(s) {}
    SolveStats stats;
};

// Jacobi-preconditioned conjugate gradients for SPD systems. Returns x with
// ||Ax - b|| <= rel_tol ||b||; throws SolveFailure (carrying the stats) on
// stagnation or when negative curvature reveals an indefinite matrix.
// max_iter <= 0 picks max(1000, 10 n).
std::vector<double> solve_spd(const SparseMatrix& A, const std::vector<double>& b,
                              double rel_tol = 1e-12, int max_iter = 0,
                              SolveStats* stats = nullptr);

struct RayleighResult {
    double lambda = 0.0;
    std::vector<double> vector; // normalized against A: v' A v = 1
    int iterations = 0;
};

// Largest eigenvalue of (u'Bu)/(u'Au) over nonzero u, for A SPD and B
// symmetric positive semidefinite, by power iteration on A^{-1}B with
// Aitken-extrapolated stopping. B = 0 returns lambda = 0.
RayleighResult generalized_rayleigh_max(const SparseMatrix& B, const SparseMatrix& A,
                                        double tol = 1e-10);

} // namespace robinfem
