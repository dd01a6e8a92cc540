#pragma once

#include <cmath>
#include <cstdint>

namespace robinfem {

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

inline double distance(const Point2& a, const Point2& b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return std::sqrt(dx * dx + dy * dy);
}

// Boundary parts of the mixed problem: homogeneous Dirichlet, prescribed
// Neumann flux, and the (possibly quadratic) Robin condition.
enum class BoundaryTag { Dirichlet, Neumann, Robin };

char tag_letter(BoundaryTag t);
BoundaryTag tag_from_letter(char c);
const char* tag_name(BoundaryTag t);

// Seed used by every randomized routine. ROBIN_SEED in the environment
// overrides the built-in default of 42.
std::uint64_t default_seed();

} // namespace robinfem
