#include "robinfem/linalg.hpp"

#include <algorithm>
#include <cmath>

#include "robinfem/kernels.hpp"

namespace robinfem {

std::vector<double> solve_spd(const SparseMatrix& A, const std::vector<double>& b, double rel_tol,
                              int max_iter, SolveStats* stats) {
    if (static_cast<int>(b.size()) != A.n)
        throw std::invalid_argument("solve_spd: right-hand side does not match the matrix");
    if (max_iter <= 0) max_iter = std::max(1000, 10 * A.n);

    SolveStats local;
    std::vector<double> x(A.n, 0.0);
    const double bnorm = norm2(b);
    if (bnorm == 0.0) {
        local.converged = true;
        if (stats) *stats = local;
        return x;
    }

    std::vector<double> inv_diag = A.diagonal();
    for (double& d : inv_diag) d = (d != 0.0) ? 1.0 / d : 1.0;

    std::vector<double> r = b;
    std::vector<double> z(A.n);
    for (int i = 0; i < A.n; ++i) z[i] = inv_diag[i] * r[i];
    std::vector<double> p = z;
    std::vector<double> Ap(A.n);
    double rz = dot(r, z);

    for (int it = 1; it <= max_iter; ++it) {
        spmv(A, p, Ap);
        const double curvature = dot(p, Ap);
        if (!(curvature > 0.0)) {
            local.iterations = it;
            local.final_residual = norm2(r) / bnorm;
            if (stats) *stats = local;
            throw SolveFailure("solve_spd: non-positive curvature, matrix is not positive definite",
                               local);
        }
        const double alpha = rz / curvature;
        axpy(alpha, p, x);
        axpy(-alpha, Ap, r);
        const double rel = norm2(r) / bnorm;
        local.iterations = it;
        local.final_residual = rel;
        if (rel <= rel_tol) {
            local.converged = true;
            if (stats) *stats = local;
            return x;
        }
        for (int i = 0; i < A.n; ++i) z[i] = inv_diag[i] * r[i];
        const double rz_next = dot(r, z);
        const double beta = rz_next / rz;
        rz = rz_next;
        for (int i = 0; i < A.n; ++i) p[i] = z[i] + beta * p[i];
    }
    if (stats) *stats = local;
    throw SolveFailure("solve_spd: no convergence within " + std::to_string(max_iter) +
                           " iterations (relative residual " + std::to_string(local.final_residual) +
                           ")",
                       local);
}

RayleighResult generalized_rayleigh_max(const SparseMatrix& B, const SparseMatrix& A, double tol) {
    if (A.n != B.n) throw std::invalid_argument("generalized_rayleigh_max: dimension mismatch");
    RayleighResult res;
    if (B.all_zero()) {
        std::vector<double> v(A.n, 1.0);
        const double s = std::sqrt(dot(v, spmv(A, v)));
        if (s > 0.0) scal(1.0 / s, v);
        res.vector = std::move(v);
        return res;
    }

    std::vector<double> v(A.n, 1.0);
    {
        const double s = std::sqrt(dot(v, spmv(A, v)));
        scal(1.0 / s, v);
    }

    const int max_iter = 50000;
    double lambda_prev = 0.0;
    double delta_prev = 0.0;
    for (int it = 1; it <= max_iter; ++it) {
        std::vector<double> bv = spmv(B, v);
        const double lambda = dot(v, bv); // v is A-normalized
        res.iterations = it;

        const double delta = lambda - lambda_prev;
        if (it >= 3) {
            if (delta <= 0.0) { // stalled at the fixed point
                res.lambda = lambda;
                res.vector = v;
                return res;
            }
            const double rho = delta_prev > 0.0 ? delta / delta_prev : 0.0;
            const double err = (rho > 0.0 && rho < 1.0) ? delta * rho / (1.0 - rho) : delta;
            if (err <= tol * std::max(lambda, 1e-300)) {
                res.lambda = lambda;
                res.vector = v;
                return res;
            }
        }
        lambda_prev = lambda;
        delta_prev = delta;

        std::vector<double> w = solve_spd(A, bv, 1e-13);
        const double s = std::sqrt(dot(w, spmv(A, w)));
        if (!(s > 0.0)) { // B v fell into the kernel; nothing above zero
            res.lambda = lambda;
            res.vector = v;
            return res;
        }
        scal(1.0 / s, w);
        v = std::move(w);
    }
    throw SolveFailure("generalized_rayleigh_max: power iteration did not settle",
                       SolveStats{max_iter, 0.0, false});
}

} // namespace robinfem
