#pragma once

#include <string>
#include <utility>

#include "robinfem/assembly.hpp"
#include "robinfem/fields.hpp"
#include "robinfem/linalg.hpp"

namespace robinfem {

// Discrete trace constants: beta1 is the sup of ||u||_L2(Gamma_R) / ||u||_V
// over the finite element space, beta2 the sup of ||u||_L3(tag) / ||u||_V.
// Both grow monotonically under uniform refinement of the same geometry.
struct TraceConstants {
    double beta1 = 0.0;
    double beta2 = 0.0;
    BoundaryTag beta2_tag = BoundaryTag::Robin;
    int mesh_level = 0;
};

// beta1 as the square root of the top generalized eigenvalue of the
// (unweighted Robin boundary mass, stiffness) pencil.
double estimate_beta1(const Mesh& mesh, const DofMap& dofs, const SparseMatrix& K);

struct Beta2Estimate {
    double value = 0.0;
    // false when no restart improved on its starting ratio (best is returned anyway)
    bool ascent_improved = true;
};

// beta2 by projected gradient ascent of ||u||_L3(tag) on the V-norm unit
// sphere, using the closed-form edge integrals and their gradients. Restarts
// are seeded from the L2-trace maximizer and from fixed-seed random vectors;
// the best ratio wins, ties broken by the earliest restart.
Beta2Estimate estimate_beta2(const Mesh& mesh, const DofMap& dofs, const SparseMatrix& K,
                             BoundaryTag tag, int restarts);

// Every constant the well-posedness theory needs, evaluated with discrete
// trace constants. The smallness conditions are referred to as (C3)/(C4):
//   (C4)  inf varphi > -eps1 with eps1 < 1/(4 beta1^2), and
//         ||psi||_inf < eps2 with eps2 < 1/(4 beta2^3 M0);
//   (C3)  the one-coefficient variant ||varphi||_inf < eps with
//         eps < min(1/(4 beta1^2), 1/(2 beta2^3 M0)).
// eps/eps1/eps2 are reported as the tightest values exceeding the observed
// coefficient magnitudes, so `admissible` compares those against the
// thresholds with no slack.
struct AdmissibilityReport {
    double beta1 = 0.0;
    double beta2 = 0.0;
    std::string beta2_tag;
    int mesh_level = 0;
    double C0 = 0.0;    // ||phi||_L2(Gamma_N) + ||g||_L2(Gamma_R)
    double M0 = 0.0;    // 2 beta1 C0, the a-priori energy bound
    double C_phi = 0.0; // min(inf varphi, 0)
    double C2 = 0.0;    // continuity constant of the linearized form
    double eps = 0.0;
    double eps1 = 0.0;
    double eps2 = 0.0;
    double eps1_threshold = 0.0;    // 1/(4 beta1^2)
    double eps2_threshold = 0.0;    // 1/(4 beta2^3 M0), +inf when M0 = 0
    double eps_threshold_c3 = 0.0;  // min(1/(4 beta1^2), 1/(2 beta2^3 M0))
    bool c3_admissible = false;
    double K_derivation = 0.0; // 2 beta2^3 eps2 M0, the contraction bound tests use
    double K_paper = 0.0;      // 2 beta1^2 eps2 M0, reported alongside
    double coercivity_margin = 0.0; // 1 - eps1 beta1^2 - eps2 beta2^3 M0
    bool admissible = false;
};

AdmissibilityReport compute_constants(const BoundaryField& phi, const BoundaryField& g,
                                      const BoundaryField& varphi, const BoundaryField& psi,
                                      const TraceConstants& tc, const Mesh& mesh);

// Quadratic Robin coefficients of the corrosion exchange model with rate
// lambda and kinetic parameter alpha in (0,1): varphi = lambda,
// psi = lambda (2 alpha - 1)/2. alpha = 1/2 is the linear case.
std::pair<BoundaryField, BoundaryField> corrosion_to_coefficients(double lambda, double alpha);

// JSON document with the fixed field list documented in the README.
std::string admissibility_report_json(const AdmissibilityReport& report,
                                      const std::string& varphi_echo,
                                      const std::string& psi_echo);

} // namespace robinfem
