#include "robinfem/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <set>
#include <stdexcept>

namespace robinfem {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kMinArcLength = 1e-12; // arcs thinner than this are rejected

std::string format_angle_pair(double a, double b) {
    char buf[80];
    std::snprintf(buf, sizeof(buf), "(%.6g, %.6g)", a, b);
    return buf;
}

} // namespace

char tag_letter(BoundaryTag t) {
    switch (t) {
    case BoundaryTag::Dirichlet: return 'D';
    case BoundaryTag::Neumann: return 'N';
    case BoundaryTag::Robin: return 'R';
    }
    return '?';
}

BoundaryTag tag_from_letter(char c) {
    switch (c) {
    case 'D': return BoundaryTag::Dirichlet;
    case 'N': return BoundaryTag::Neumann;
    case 'R': return BoundaryTag::Robin;
    default: throw std::invalid_argument(std::string("unknown boundary tag letter '") + c + "'");
    }
}

const char* tag_name(BoundaryTag t) {
    switch (t) {
    case BoundaryTag::Dirichlet: return "Dirichlet";
    case BoundaryTag::Neumann: return "Neumann";
    case BoundaryTag::Robin: return "Robin";
    }
    return "?";
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("ROBIN_SEED")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0') return static_cast<std::uint64_t>(v);
        throw std::invalid_argument("ROBIN_SEED must be an unsigned integer");
    }
    return 42u;
}

void AngularPartition::validate() const {
    if (!(radius > 0.0) || !std::isfinite(radius))
        throw std::invalid_argument("partition radius must be positive and finite");
    if (arcs.empty()) throw std::invalid_argument("partition has no arcs");

    std::vector<ArcSpec> sorted = arcs;
    std::sort(sorted.begin(), sorted.end(),
              [](const ArcSpec& l, const ArcSpec& r) { return l.theta_start < r.theta_start; });

    bool has[3] = {false, false, false};
    double covered = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const ArcSpec& arc = sorted[i];
        if (!std::isfinite(arc.theta_start) || !std::isfinite(arc.theta_end))
            throw std::invalid_argument("arc angles must be finite");
        if (arc.length() < kMinArcLength)
            throw std::invalid_argument("arc " + format_angle_pair(arc.theta_start, arc.theta_end) +
                                        " has zero (or negative) angular length");
        if (arc.theta_start < -kMinArcLength || arc.theta_end > kTwoPi + kMinArcLength)
            throw std::invalid_argument("arc " + format_angle_pair(arc.theta_start, arc.theta_end) +
                                        " lies outside (0, 2*pi)");
        if (i + 1 < sorted.size()) {
            const double gap = sorted[i + 1].theta_start - arc.theta_end;
            if (gap > kMinArcLength)
                throw std::invalid_argument("gap between arcs at angle " +
                                            format_angle_pair(arc.theta_end, sorted[i + 1].theta_start));
            if (gap < -kMinArcLength)
                throw std::invalid_argument("overlapping arcs at angle " +
                                            format_angle_pair(sorted[i + 1].theta_start, arc.theta_end));
        }
        covered += arc.length();
        has[static_cast<int>(arc.tag)] = true;
    }
    if (std::abs(sorted.front().theta_start) > kMinArcLength)
        throw std::invalid_argument("arcs must start at angle 0");
    if (std::abs(covered - kTwoPi) > 1e-9)
        throw std::invalid_argument("arcs do not cover the full circle");
    for (int t = 0; t < 3; ++t)
        if (!has[t])
            throw std::invalid_argument(std::string("partition is missing a ") +
                                        tag_name(static_cast<BoundaryTag>(t)) + " arc");
}

namespace {

BoundaryTag tag_of_angle(const std::vector<ArcSpec>& sorted, double theta) {
    for (const ArcSpec& a : sorted)
        if (theta >= a.theta_start && theta <= a.theta_end) return a.tag;
    // wrapped midpoints of the closing edge
    for (const ArcSpec& a : sorted)
        if (theta - kTwoPi >= a.theta_start && theta - kTwoPi <= a.theta_end) return a.tag;
    throw std::logic_error("angle not covered by any arc");
}

Mesh build_disk_level0(const AngularPartition& partition) {
    partition.validate();
    const double R = partition.radius;

    std::vector<ArcSpec> sorted = partition.arcs;
    std::sort(sorted.begin(), sorted.end(),
              [](const ArcSpec& l, const ArcSpec& r) { return l.theta_start < r.theta_start; });

    // Boundary node count: twice the breakpoint count rounded up to a
    // multiple of 4, never fewer than 16 nodes, breakpoints always included.
    const std::size_t breakpoints = sorted.size();
    const std::size_t rounded = ((breakpoints + 3) / 4) * 4;
    const std::size_t target = 2 * std::max<std::size_t>(8, rounded);

    std::vector<double> angles;
    for (const ArcSpec& arc : sorted) {
        const int segments = std::max<int>(1, static_cast<int>(std::llround(
                                                  static_cast<double>(target) * arc.length() / kTwoPi)));
        for (int k = 0; k < segments; ++k)
            angles.push_back(arc.theta_start + arc.length() * k / segments);
    }
    const int m = static_cast<int>(angles.size());

    Mesh mesh;
    mesh.radius = R;
    mesh.level = 0;
    mesh.nodes.reserve(1 + 2 * m);
    mesh.nodes.push_back({0.0, 0.0});
    for (double th : angles) mesh.nodes.push_back({0.5 * R * std::cos(th), 0.5 * R * std::sin(th)});
    for (double th : angles) mesh.nodes.push_back({R * std::cos(th), R * std::sin(th)});

    const auto ring = [&](int i) { return 1 + (i % m); };
    const auto rim = [&](int i) { return 1 + m + (i % m); };

    mesh.triangles.reserve(3 * m);
    for (int i = 0; i < m; ++i) {
        mesh.triangles.push_back({0, ring(i), ring(i + 1)});
        mesh.triangles.push_back({ring(i), rim(i), rim(i + 1)});
        mesh.triangles.push_back({ring(i), rim(i + 1), ring(i + 1)});
    }

    mesh.boundary_edges.reserve(m);
    for (int i = 0; i < m; ++i) {
        const double next = (i + 1 < m) ? angles[i + 1] : angles[0] + kTwoPi;
        const double mid = 0.5 * (angles[i] + next);
        mesh.boundary_edges.push_back({rim(i), rim(i + 1), tag_of_angle(sorted, mid)});
    }
    return mesh;
}

Mesh build_half_disk_level0(double R, double split_angle) {
    if (!(R > 0.0) || !std::isfinite(R))
        throw std::invalid_argument("half-disk radius must be positive and finite");
    if (!(split_angle > 0.0) || !(split_angle < std::numbers::pi))
        throw std::invalid_argument("split_angle must lie strictly inside (0, pi)");

    const double target_h = std::numbers::pi / 8.0;
    const int n1 = std::max<int>(2, static_cast<int>(std::llround(split_angle / target_h)));
    const int n2 = std::max<int>(2, static_cast<int>(std::llround((std::numbers::pi - split_angle) / target_h)));

    std::vector<double> angles;
    for (int k = 0; k <= n1; ++k) angles.push_back(split_angle * k / n1);
    for (int k = 1; k <= n2; ++k)
        angles.push_back(split_angle + (std::numbers::pi - split_angle) * k / n2);

    Mesh mesh;
    mesh.radius = R;
    mesh.level = 0;
    mesh.nodes.push_back({0.0, 0.0});
    for (double th : angles) mesh.nodes.push_back({R * std::cos(th), R * std::sin(th)});
    // keep the endpoints of the diameter exact
    mesh.nodes[1] = {R, 0.0};
    mesh.nodes.back() = {-R, 0.0};

    const int arc_nodes = static_cast<int>(angles.size());
    for (int i = 0; i + 1 < arc_nodes; ++i) mesh.triangles.push_back({0, 1 + i, 2 + i});

    for (int i = 0; i + 1 < arc_nodes; ++i) {
        const double mid = 0.5 * (angles[i] + angles[i + 1]);
        const BoundaryTag tag = (mid < split_angle) ? BoundaryTag::Neumann : BoundaryTag::Robin;
        mesh.boundary_edges.push_back({1 + i, 2 + i, tag});
    }
    mesh.boundary_edges.push_back({arc_nodes, 0, BoundaryTag::Dirichlet}); // (-R,0) -> origin
    mesh.boundary_edges.push_back({0, 1, BoundaryTag::Dirichlet});         // origin -> (R,0)
    return mesh;
}

} // namespace

Mesh build_disk_mesh(const AngularPartition& partition, int level) {
    if (level < 0) throw std::invalid_argument("refinement level must be >= 0");
    Mesh mesh = build_disk_level0(partition);
    for (int l = 0; l < level; ++l) mesh = refine_uniform(mesh);
    return mesh;
}

Mesh build_half_disk_mesh(double radius, double split_angle, int level) {
    if (level < 0) throw std::invalid_argument("refinement level must be >= 0");
    Mesh mesh = build_half_disk_level0(radius, split_angle);
    for (int l = 0; l < level; ++l) mesh = refine_uniform(mesh);
    return mesh;
}

Mesh refine_uniform(const Mesh& mesh) {
    Mesh out;
    out.radius = mesh.radius;
    out.level = mesh.level + 1;
    out.nodes = mesh.nodes;

    std::map<std::pair<int, int>, int> midpoint;
    const auto mid_node = [&](int a, int b) {
        const auto key = std::minmax(a, b);
        auto it = midpoint.find(key);
        if (it != midpoint.end()) return it->second;
        const Point2& pa = mesh.nodes[a];
        const Point2& pb = mesh.nodes[b];
        const int idx = static_cast<int>(out.nodes.size());
        out.nodes.push_back({0.5 * (pa.x + pb.x), 0.5 * (pa.y + pb.y)});
        midpoint.emplace(key, idx);
        return idx;
    };

    out.triangles.reserve(4 * mesh.triangles.size());
    for (const auto& t : mesh.triangles) {
        const int m01 = mid_node(t[0], t[1]);
        const int m12 = mid_node(t[1], t[2]);
        const int m20 = mid_node(t[2], t[0]);
        out.triangles.push_back({t[0], m01, m20});
        out.triangles.push_back({m01, t[1], m12});
        out.triangles.push_back({m20, m12, t[2]});
        out.triangles.push_back({m01, m12, m20});
    }

    const auto on_circle = [&](const Point2& p) {
        const double r = std::sqrt(p.x * p.x + p.y * p.y);
        return std::abs(r - mesh.radius) <= 1e-9 * mesh.radius;
    };

    out.boundary_edges.reserve(2 * mesh.boundary_edges.size());
    for (const BoundaryEdge& e : mesh.boundary_edges) {
        const int m = mid_node(e.a, e.b);
        // chord midpoints between two circle nodes go back onto the circle
        if (mesh.radius > 0.0 && on_circle(mesh.nodes[e.a]) && on_circle(mesh.nodes[e.b])) {
            Point2& p = out.nodes[m];
            const double r = std::sqrt(p.x * p.x + p.y * p.y);
            if (r > 0.0) {
                p.x *= mesh.radius / r;
                p.y *= mesh.radius / r;
            }
        }
        out.boundary_edges.push_back({e.a, m, e.tag});
        out.boundary_edges.push_back({m, e.b, e.tag});
    }
    return out;
}

double triangle_area(const Mesh& mesh, int t) {
    const auto& tri = mesh.triangles[t];
    const Point2& p0 = mesh.nodes[tri[0]];
    const Point2& p1 = mesh.nodes[tri[1]];
    const Point2& p2 = mesh.nodes[tri[2]];
    return 0.5 * ((p1.x - p0.x) * (p2.y - p0.y) - (p2.x - p0.x) * (p1.y - p0.y));
}

double max_triangle_diameter(const Mesh& mesh) {
    double h = 0.0;
    for (const auto& tri : mesh.triangles)
        for (int i = 0; i < 3; ++i)
            h = std::max(h, distance(mesh.nodes[tri[i]], mesh.nodes[tri[(i + 1) % 3]]));
    return h;
}

ValidationReport validate_partition(const Mesh& mesh) {
    ValidationReport report;
    auto complain = [&](const std::string& s) { report.violations.push_back(s); };

    for (std::size_t t = 0; t < mesh.triangles.size(); ++t)
        if (!(triangle_area(mesh, static_cast<int>(t)) > 0.0))
            complain("triangle " + std::to_string(t) + " has non-positive area");

    std::map<std::pair<int, int>, int> incidence;
    for (const auto& tri : mesh.triangles)
        for (int i = 0; i < 3; ++i)
            incidence[std::minmax(tri[i], tri[(i + 1) % 3])]++;

    std::set<std::pair<int, int>> tagged;
    for (const BoundaryEdge& e : mesh.boundary_edges) {
        const auto key = std::minmax(e.a, e.b);
        if (!tagged.insert(key).second)
            complain("edge (" + std::to_string(e.a) + "," + std::to_string(e.b) + ") carries two tags");
        auto it = incidence.find(key);
        if (it == incidence.end())
            complain("tagged edge (" + std::to_string(e.a) + "," + std::to_string(e.b) +
                     ") is not an edge of the triangulation");
        else if (it->second != 1)
            complain("tagged edge (" + std::to_string(e.a) + "," + std::to_string(e.b) +
                     ") is interior to the triangulation");
    }
    for (const auto& [edge, count] : incidence) {
        if (count == 1 && !tagged.count(edge))
            complain("boundary not closed: edge (" + std::to_string(edge.first) + "," +
                     std::to_string(edge.second) + ") has no tag");
        if (count > 2)
            complain("non-manifold edge (" + std::to_string(edge.first) + "," +
                     std::to_string(edge.second) + ")");
    }

    for (BoundaryTag tag : {BoundaryTag::Dirichlet, BoundaryTag::Neumann, BoundaryTag::Robin})
        if (!(boundary_measure(mesh, tag) > 0.0))
            complain(std::string("sigma(Gamma_") + tag_letter(tag) + ") = 0");

    return report;
}

double boundary_measure(const Mesh& mesh, BoundaryTag tag) {
    double total = 0.0;
    for (const BoundaryEdge& e : mesh.boundary_edges)
        if (e.tag == tag) total += distance(mesh.nodes[e.a], mesh.nodes[e.b]);
    return total;
}

int count_tagged_chains(const Mesh& mesh, BoundaryTag tag) {
    std::vector<int> parent;
    std::map<int, int> node_slot;
    const auto slot = [&](int node) {
        auto it = node_slot.find(node);
        if (it != node_slot.end()) return it->second;
        const int s = static_cast<int>(parent.size());
        parent.push_back(s);
        node_slot.emplace(node, s);
        return s;
    };
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };

    int edges = 0;
    int merges = 0;
    for (const BoundaryEdge& e : mesh.boundary_edges) {
        if (e.tag != tag) continue;
        ++edges;
        const int ra = find(slot(e.a));
        const int rb = find(slot(e.b));
        if (ra != rb) {
            parent[ra] = rb;
            ++merges;
        }
    }
    if (edges == 0) return 0;
    return static_cast<int>(node_slot.size()) - merges;
}

void write_mesh(const Mesh& mesh, std::ostream& out) {
    char buf[128];
    out << "$Nodes\n" << mesh.nodes.size() << "\n";
    for (std::size_t i = 0; i < mesh.nodes.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%zu %.17g %.17g\n", i, mesh.nodes[i].x, mesh.nodes[i].y);
        out << buf;
    }
    out << "$Triangles\n" << mesh.triangles.size() << "\n";
    for (std::size_t i = 0; i < mesh.triangles.size(); ++i) {
        const auto& t = mesh.triangles[i];
        out << i << ' ' << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
    }
    out << "$BoundaryEdges\n" << mesh.boundary_edges.size() << "\n";
    for (std::size_t i = 0; i < mesh.boundary_edges.size(); ++i) {
        const BoundaryEdge& e = mesh.boundary_edges[i];
        out << i << ' ' << e.a << ' ' << e.b << ' ' << tag_letter(e.tag) << '\n';
    }
    out << "$End\n";
}

namespace {

void expect_section(std::istream& in, const std::string& want) {
    std::string token;
    if (!(in >> token) || token != want)
        throw std::invalid_argument("mesh file: expected section " + want);
}

} // namespace

Mesh read_mesh(std::istream& in) {
    Mesh mesh;
    expect_section(in, "$Nodes");
    std::size_t n = 0;
    if (!(in >> n)) throw std::invalid_argument("mesh file: bad node count");
    mesh.nodes.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t id;
        if (!(in >> id >> mesh.nodes[i].x >> mesh.nodes[i].y) || id != i)
            throw std::invalid_argument("mesh file: bad node record " + std::to_string(i));
    }
    expect_section(in, "$Triangles");
    std::size_t m = 0;
    if (!(in >> m)) throw std::invalid_argument("mesh file: bad triangle count");
    mesh.triangles.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        std::size_t id;
        auto& t = mesh.triangles[i];
        if (!(in >> id >> t[0] >> t[1] >> t[2]) || id != i)
            throw std::invalid_argument("mesh file: bad triangle record " + std::to_string(i));
    }
    expect_section(in, "$BoundaryEdges");
    std::size_t k = 0;
    if (!(in >> k)) throw std::invalid_argument("mesh file: bad boundary edge count");
    mesh.boundary_edges.resize(k);
    for (std::size_t i = 0; i < k; ++i) {
        std::size_t id;
        char letter;
        BoundaryEdge& e = mesh.boundary_edges[i];
        if (!(in >> id >> e.a >> e.b >> letter) || id != i)
            throw std::invalid_argument("mesh file: bad boundary edge record " + std::to_string(i));
        e.tag = tag_from_letter(letter);
    }
    expect_section(in, "$End");

    for (const BoundaryEdge& e : mesh.boundary_edges) {
        const Point2& pa = mesh.nodes.at(e.a);
        const Point2& pb = mesh.nodes.at(e.b);
        mesh.radius = std::max({mesh.radius, std::sqrt(pa.x * pa.x + pa.y * pa.y),
                                std::sqrt(pb.x * pb.x + pb.y * pb.y)});
    }
    return mesh;
}

void write_mesh_file(const Mesh& mesh, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    write_mesh(mesh, out);
}

Mesh read_mesh_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_mesh(in);
}

} // namespace robinfem
