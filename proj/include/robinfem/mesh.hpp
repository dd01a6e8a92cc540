#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "robinfem/types.hpp"

namespace robinfem {

struct ArcSpec {
    BoundaryTag tag;
    double theta_start = 0.0;
    double theta_end = 0.0;
    double length() const { return theta_end - theta_start; }
};

// Partition of a disk boundary into tagged open arcs. The arcs must tile
// (0, 2*pi) without gaps or overlaps and every tag must appear with positive
// angular length.
struct AngularPartition {
    double radius = 1.0;
    std::vector<ArcSpec> arcs;

    // Throws std::invalid_argument with a description of the first problem.
    void validate() const;
};

struct BoundaryEdge {
    int a = -1;
    int b = -1;
    BoundaryTag tag = BoundaryTag::Dirichlet;
};

// Conforming P1 triangulation of a disk or half-disk. Triangles are
// counter-clockwise node triples. Values are immutable once built; refinement
// returns a new mesh.
struct Mesh {
    std::vector<Point2> nodes;
    std::vector<std::array<int, 3>> triangles;
    std::vector<BoundaryEdge> boundary_edges;
    double radius = 0.0; // circle the curved boundary nodes lie on
    int level = 0;
};

Mesh build_disk_mesh(const AngularPartition& partition, int level);

// Upper half-disk: the diameter is Dirichlet, the arc is Neumann on
// (0, split_angle) and Robin on (split_angle, pi).
Mesh build_half_disk_mesh(double radius, double split_angle, int level);

// 1-to-4 split through edge midpoints; midpoints of curved boundary edges are
// re-projected to the circle, tags are inherited.
Mesh refine_uniform(const Mesh& mesh);

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// Non-throwing mesh/tagging sanity check: positive areas, closed boundary,
// two triangles per interior edge, positive measure for each tag.
ValidationReport validate_partition(const Mesh& mesh);

// Sum of edge lengths carrying the tag.
double boundary_measure(const Mesh& mesh, BoundaryTag tag);

// Number of connected chains formed by the edges of a tag.
int count_tagged_chains(const Mesh& mesh, BoundaryTag tag);

double triangle_area(const Mesh& mesh, int t);
double max_triangle_diameter(const Mesh& mesh);

// Plain-text mesh exchange format:
//   $Nodes / $Triangles / $BoundaryEdges sections, 0-based ids,
//   coordinates with 17 significant digits, tags D/N/R.
void write_mesh(const Mesh& mesh, std::ostream& out);
Mesh read_mesh(std::istream& in);
void write_mesh_file(const Mesh& mesh, const std::string& path);
Mesh read_mesh_file(const std::string& path);

} // namespace robinfem
