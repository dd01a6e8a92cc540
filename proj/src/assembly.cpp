#include "robinfem/assembly.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "robinfem/kernels.hpp"

namespace robinfem {

namespace {

// 2-point Gauss on the unit interval
constexpr double kGaussOffset = 0.28867513459481287; // 1/(2 sqrt(3))
constexpr double kGaussT[2] = {0.5 - kGaussOffset, 0.5 + kGaussOffset};

struct LocalStiffness {
    int nodes[3];
    double k[3][3];
};

inline LocalStiffness local_stiffness(const Mesh& mesh, int t) {
    const auto& tri = mesh.triangles[t];
    const Point2& p0 = mesh.nodes[tri[0]];
    const Point2& p1 = mesh.nodes[tri[1]];
    const Point2& p2 = mesh.nodes[tri[2]];
    const double area = 0.5 * ((p1.x - p0.x) * (p2.y - p0.y) - (p2.x - p0.x) * (p1.y - p0.y));
    if (!(area > 0.0))
        throw std::invalid_argument("degenerate triangle " + std::to_string(t) +
                                    " (area <= 0) in stiffness assembly");
    const double b[3] = {p1.y - p2.y, p2.y - p0.y, p0.y - p1.y};
    const double c[3] = {p2.x - p1.x, p0.x - p2.x, p1.x - p0.x};
    LocalStiffness loc;
    for (int i = 0; i < 3; ++i) loc.nodes[i] = tri[i];
    const double scale = 1.0 / (4.0 * area);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) loc.k[i][j] = (b[i] * b[j] + c[i] * c[j]) * scale;
    return loc;
}

template <class Weight>
SparseMatrix assemble_edge_mass(const Mesh& mesh, const DofMap& dofs, BoundaryTag tag,
                                Weight&& weight_at) {
    std::vector<Triplet> triplets;
    for (const BoundaryEdge& e : mesh.boundary_edges) {
        if (e.tag != tag) continue;
        const Point2& pa = mesh.nodes[e.a];
        const Point2& pb = mesh.nodes[e.b];
        const double len = distance(pa, pb);
        double m[2][2] = {{0.0, 0.0}, {0.0, 0.0}};
        for (double t : kGaussT) {
            const Point2 xq{pa.x + t * (pb.x - pa.x), pa.y + t * (pb.y - pa.y)};
            const double w = 0.5 * len * weight_at(e, xq, t);
            const double shape[2] = {1.0 - t, t};
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) m[i][j] += w * shape[i] * shape[j];
        }
        const int dof[2] = {dofs.node_to_dof[e.a], dofs.node_to_dof[e.b]};
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                if (dof[i] >= 0 && dof[j] >= 0) triplets.push_back({dof[i], dof[j], m[i][j]});
    }
    return from_triplets(dofs.n_free, std::move(triplets));
}

} // namespace

DofMap DofMap::all_free(const Mesh& mesh) {
    DofMap d;
    const int n = static_cast<int>(mesh.nodes.size());
    d.node_to_dof.resize(n);
    d.dof_to_node.resize(n);
    for (int i = 0; i < n; ++i) d.node_to_dof[i] = d.dof_to_node[i] = i;
    d.n_free = n;
    return d;
}

DofMap build_dof_map(const Mesh& mesh) {
    const int n = static_cast<int>(mesh.nodes.size());
    std::vector<char> constrained(n, 0);
    bool any_dirichlet = false;
    for (const BoundaryEdge& e : mesh.boundary_edges) {
        if (e.tag != BoundaryTag::Dirichlet) continue;
        constrained[e.a] = constrained[e.b] = 1;
        any_dirichlet = true;
    }
    if (!any_dirichlet)
        throw std::invalid_argument(
            "mesh has no Dirichlet edge: the energy seminorm is not a norm on this space");

    DofMap d;
    d.node_to_dof.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        if (constrained[i]) continue;
        d.node_to_dof[i] = d.n_free++;
        d.dof_to_node.push_back(i);
    }
    return d;
}

SparseMatrix assemble_stiffness(const Mesh& mesh, const DofMap& dofs) {
    const int nt = static_cast<int>(mesh.triangles.size());
    std::vector<LocalStiffness> local(nt);
#pragma omp parallel for schedule(static)
    for (int t = 0; t < nt; ++t) local[t] = local_stiffness(mesh, t);

    // scatter in triangle order; from_triplets keeps that order per cell
    std::vector<Triplet> triplets;
    triplets.reserve(static_cast<std::size_t>(nt) * 9);
    for (int t = 0; t < nt; ++t) {
        const LocalStiffness& loc = local[t];
        for (int i = 0; i < 3; ++i) {
            const int di = dofs.node_to_dof[loc.nodes[i]];
            if (di < 0) continue;
            for (int j = 0; j < 3; ++j) {
                const int dj = dofs.node_to_dof[loc.nodes[j]];
                if (dj >= 0) triplets.push_back({di, dj, loc.k[i][j]});
            }
        }
    }
    return from_triplets(dofs.n_free, std::move(triplets));
}

namespace serial {

SparseMatrix assemble_stiffness(const Mesh& mesh, const DofMap& dofs) {
    std::map<std::pair<int, int>, double> entries;
    for (int t = 0; t < static_cast<int>(mesh.triangles.size()); ++t) {
        const LocalStiffness loc = local_stiffness(mesh, t);
        for (int i = 0; i < 3; ++i) {
            const int di = dofs.node_to_dof[loc.nodes[i]];
            if (di < 0) continue;
            for (int j = 0; j < 3; ++j) {
                const int dj = dofs.node_to_dof[loc.nodes[j]];
                if (dj >= 0) entries[{di, dj}] += loc.k[i][j];
            }
        }
    }
    SparseMatrix A;
    A.n = dofs.n_free;
    A.row_ptr.assign(dofs.n_free + 1, 0);
    for (const auto& [key, value] : entries) {
        A.cols.push_back(key.second);
        A.vals.push_back(value);
        A.row_ptr[key.first + 1]++;
    }
    for (int r = 0; r < A.n; ++r) A.row_ptr[r + 1] += A.row_ptr[r];
    return A;
}

} // namespace serial

SparseMatrix assemble_boundary_mass(const Mesh& mesh, const DofMap& dofs, BoundaryTag tag,
                                    const BoundaryField& weight) {
    return assemble_edge_mass(mesh, dofs, tag,
                              [&](const BoundaryEdge&, const Point2& xq, double) { return weight(xq); });
}

SparseMatrix assemble_boundary_mass(const Mesh& mesh, const DofMap& dofs, BoundaryTag tag,
                                    const BoundaryField& coeff, const NodalField& nodal) {
    if (nodal.size() != mesh.nodes.size())
        throw std::invalid_argument("trace weight must be given at every mesh node");
    return assemble_edge_mass(mesh, dofs, tag, [&](const BoundaryEdge& e, const Point2& xq, double t) {
        const double trace = (1.0 - t) * nodal[e.a] + t * nodal[e.b];
        return coeff(xq) * trace;
    });
}

NodalField assemble_boundary_load(const Mesh& mesh, const DofMap& dofs, BoundaryTag tag,
                                  const BoundaryField& data) {
    NodalField rhs(dofs.n_free, 0.0);
    for (const BoundaryEdge& e : mesh.boundary_edges) {
        if (e.tag != tag) continue;
        const Point2& pa = mesh.nodes[e.a];
        const Point2& pb = mesh.nodes[e.b];
        const double len = distance(pa, pb);
        double load[2] = {0.0, 0.0};
        for (double t : kGaussT) {
            const Point2 xq{pa.x + t * (pb.x - pa.x), pa.y + t * (pb.y - pa.y)};
            const double w = 0.5 * len * data(xq);
            load[0] += w * (1.0 - t);
            load[1] += w * t;
        }
        const int dof[2] = {dofs.node_to_dof[e.a], dofs.node_to_dof[e.b]};
        for (int i = 0; i < 2; ++i)
            if (dof[i] >= 0) rhs[dof[i]] += load[i];
    }
    return rhs;
}

double v_norm(const NodalField& u_free, const SparseMatrix& K) {
    if (static_cast<int>(u_free.size()) != K.n)
        throw std::invalid_argument("v_norm: vector does not match the stiffness dimension");
    return std::sqrt(std::max(0.0, dot(u_free, spmv(K, u_free))));
}

double edge_abs_cubed_integral(double a, double b, double length) {
    const double m = std::max(std::abs(a), std::abs(b));
    if (m == 0.0) return 0.0;
    const double d = b - a;
    if (std::abs(d) <= 1e-5 * m) {
        const double mid = 0.5 * (a + b);
        const double am = std::abs(mid);
        return length * (am * am * am + 0.25 * am * d * d);
    }
    return length * (b * std::abs(b) * b * b - a * std::abs(a) * a * a) / (4.0 * d);
}

void edge_abs_cubed_gradient(double a, double b, double length, double& da, double& db) {
    const double m = std::max(std::abs(a), std::abs(b));
    if (m == 0.0) {
        da = db = 0.0;
        return;
    }
    const double d = b - a;
    if (std::abs(d) <= 1e-5 * m) {
        const double mid = 0.5 * (a + b);
        const double am = std::abs(mid);
        const double sg = mid >= 0.0 ? 1.0 : -1.0;
        da = length * (1.5 * mid * am + 0.125 * d * d * sg - 0.5 * am * d);
        db = length * (1.5 * mid * am + 0.125 * d * d * sg + 0.5 * am * d);
        return;
    }
    const double na = a * std::abs(a) * a * a; // a |a|^3
    const double nb = b * std::abs(b) * b * b;
    const double n = nb - na;
    const double aa3 = std::abs(a) * a * a; // |a|^3
    const double bb3 = std::abs(b) * b * b;
    da = length * (n - 4.0 * aa3 * d) / (4.0 * d * d);
    db = length * (4.0 * bb3 * d - n) / (4.0 * d * d);
}

double boundary_lp_norm(const Mesh& mesh, BoundaryTag tag, const NodalField& u_nodal, int p) {
    if (u_nodal.size() != mesh.nodes.size())
        throw std::invalid_argument("boundary norm: field must be given at every mesh node");
    if (p == p_infinity) {
        double m = 0.0;
        for (const BoundaryEdge& e : mesh.boundary_edges)
            if (e.tag == tag) m = std::max({m, std::abs(u_nodal[e.a]), std::abs(u_nodal[e.b])});
        return m;
    }
    if (p == 2) {
        double s = 0.0;
        for (const BoundaryEdge& e : mesh.boundary_edges) {
            if (e.tag != tag) continue;
            const double a = u_nodal[e.a];
            const double b = u_nodal[e.b];
            s += distance(mesh.nodes[e.a], mesh.nodes[e.b]) * (a * a + a * b + b * b) / 3.0;
        }
        return std::sqrt(std::max(0.0, s));
    }
    if (p == 3) return std::cbrt(boundary_l3_cubed(mesh, tag, u_nodal));
    throw std::invalid_argument("boundary norm: p must be 2, 3 or p_infinity");
}

double boundary_l3_cubed(const Mesh& mesh, BoundaryTag tag, const NodalField& u_nodal) {
    if (u_nodal.size() != mesh.nodes.size())
        throw std::invalid_argument("boundary norm: field must be given at every mesh node");
    double s = 0.0;
    for (const BoundaryEdge& e : mesh.boundary_edges) {
        if (e.tag != tag) continue;
        s += edge_abs_cubed_integral(u_nodal[e.a], u_nodal[e.b],
                                     distance(mesh.nodes[e.a], mesh.nodes[e.b]));
    }
    return s;
}

NodalField boundary_l3_cubed_gradient(const Mesh& mesh, BoundaryTag tag, const NodalField& u_nodal) {
    NodalField grad(mesh.nodes.size(), 0.0);
    for (const BoundaryEdge& e : mesh.boundary_edges) {
        if (e.tag != tag) continue;
        double da = 0.0, db = 0.0;
        edge_abs_cubed_gradient(u_nodal[e.a], u_nodal[e.b],
                                distance(mesh.nodes[e.a], mesh.nodes[e.b]), da, db);
        grad[e.a] += da;
        grad[e.b] += db;
    }
    return grad;
}

double data_l2_norm(const Mesh& mesh, BoundaryTag tag, const BoundaryField& data) {
    double s = 0.0;
    for (const BoundaryEdge& e : mesh.boundary_edges) {
        if (e.tag != tag) continue;
        const Point2& pa = mesh.nodes[e.a];
        const Point2& pb = mesh.nodes[e.b];
        const double len = distance(pa, pb);
        for (double t : kGaussT) {
            const Point2 xq{pa.x + t * (pb.x - pa.x), pa.y + t * (pb.y - pa.y)};
            const double v = data(xq);
            s += 0.5 * len * v * v;
        }
    }
    return std::sqrt(s);
}

std::pair<double, double> data_range(const Mesh& mesh, BoundaryTag tag, const BoundaryField& data) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    const auto visit = [&](const Point2& p) {
        const double v = data(p);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    };
    for (const BoundaryEdge& e : mesh.boundary_edges) {
        if (e.tag != tag) continue;
        const Point2& pa = mesh.nodes[e.a];
        const Point2& pb = mesh.nodes[e.b];
        visit(pa);
        visit(pb);
        for (double t : kGaussT) visit({pa.x + t * (pb.x - pa.x), pa.y + t * (pb.y - pa.y)});
    }
    if (lo > hi) throw std::invalid_argument("data_range: tag has no edges");
    return {lo, hi};
}

NodalField expand(const DofMap& dofs, const NodalField& free_values) {
    if (static_cast<int>(free_values.size()) != dofs.n_free)
        throw std::invalid_argument("expand: vector does not match the free dof count");
    NodalField nodal(dofs.node_to_dof.size(), 0.0);
    for (int d = 0; d < dofs.n_free; ++d) nodal[dofs.dof_to_node[d]] = free_values[d];
    return nodal;
}

NodalField restrict_to_free(const DofMap& dofs, const NodalField& nodal) {
    if (nodal.size() != dofs.node_to_dof.size())
        throw std::invalid_argument("restrict: vector does not match the node count");
    NodalField free_values(dofs.n_free, 0.0);
    for (int d = 0; d < dofs.n_free; ++d) free_values[d] = nodal[dofs.dof_to_node[d]];
    return free_values;
}

} // namespace robinfem
