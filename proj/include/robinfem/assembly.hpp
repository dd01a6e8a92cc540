#pragma once

#include <limits>
#include <utility>
#include <vector>

#include "robinfem/fields.hpp"
#include "robinfem/mesh.hpp"
#include "robinfem/sparse.hpp"

namespace robinfem {

// One value per mesh node, or per free dof where stated.
using NodalField = std::vector<double>;

// Test space after homogeneous Dirichlet reduction: every node on the closure
// of Gamma_D is eliminated, the remaining nodes get contiguous dof numbers in
// node order.
struct DofMap {
    std::vector<int> node_to_dof; // -1 where constrained
    std::vector<int> dof_to_node;
    int n_free = 0;

    int n_constrained() const { return static_cast<int>(node_to_dof.size()) - n_free; }
    static DofMap all_free(const Mesh& mesh);
};

// Throws if the mesh has no Dirichlet edge (the energy seminorm would not be
// a norm on the resulting space).
DofMap build_dof_map(const Mesh& mesh);

// Stiffness on free dofs, exact per-triangle P1 gradients. Triangle-local
// blocks are computed in parallel; the scatter runs in triangle order so the
// result is bitwise identical to serial::assemble_stiffness.
SparseMatrix assemble_stiffness(const Mesh& mesh, const DofMap& dofs);

// Boundary mass with entries int_tag w phi_i phi_j, 2-point Gauss per edge
// (exact while the integrand stays cubic in the edge parameter).
SparseMatrix assemble_boundary_mass(const Mesh& mesh, const DofMap& dofs, BoundaryTag tag,
                                    const BoundaryField& weight);

// Same with weight(x) = coeff(x) * (piecewise linear trace of `nodal`); this
// is the linearized Robin term with coeff = psi and nodal = previous iterate.
SparseMatrix assemble_boundary_mass(const Mesh& mesh, const DofMap& dofs, BoundaryTag tag,
                                    const BoundaryField& coeff, const NodalField& nodal);

// Load vector with entries int_tag data phi_i on free dofs.
NodalField assemble_boundary_load(const Mesh& mesh, const DofMap& dofs, BoundaryTag tag,
                                  const BoundaryField& data);

// sqrt(u' K u)
double v_norm(const NodalField& u_free, const SparseMatrix& K);

inline constexpr int p_infinity = std::numeric_limits<int>::max();

// L^p norm of the piecewise linear trace over the tagged edges; p = 2 and
// p = 3 use closed-form edge integrals, p_infinity takes the nodal max.
double boundary_lp_norm(const Mesh& mesh, BoundaryTag tag, const NodalField& u_nodal, int p);

// int_edge |a + (b-a) t/L|^3 dt for the linear trace a -> b over length L,
// and its derivatives with respect to the endpoint values.
double edge_abs_cubed_integral(double a, double b, double length);
void edge_abs_cubed_gradient(double a, double b, double length, double& da, double& db);

// int_tag |u|^3 and its gradient with respect to nodal values.
double boundary_l3_cubed(const Mesh& mesh, BoundaryTag tag, const NodalField& u_nodal);
NodalField boundary_l3_cubed_gradient(const Mesh& mesh, BoundaryTag tag, const NodalField& u_nodal);

// Norm/extrema of coefficient data sampled exactly where assembly samples it:
// the 2-point Gauss nodes (plus the edge endpoints for the range).
double data_l2_norm(const Mesh& mesh, BoundaryTag tag, const BoundaryField& data);
std::pair<double, double> data_range(const Mesh& mesh, BoundaryTag tag, const BoundaryField& data);

NodalField expand(const DofMap& dofs, const NodalField& free_values);
NodalField restrict_to_free(const DofMap& dofs, const NodalField& nodal);

namespace serial {
// Reference assembly: one triangle at a time into a coordinate map.
SparseMatrix assemble_stiffness(const Mesh& mesh, const DofMap& dofs);
} // namespace serial

} // namespace robinfem
