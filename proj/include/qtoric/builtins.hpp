#pragma once

// Named test polytopes with rational coordinates.

#include <optional>
#include <string>
#include <vector>

#include "qtoric/polytope.hpp"

namespace qtoric::builtin {

/// Convex m-gon with vertices on the parabola y = x^2.
CombPolytope polygon(int m);
CombPolytope cube();
/// Standard n-simplex: origin and the unit vectors.
CombPolytope simplex(int n);
CombPolytope octahedron();
CombPolytope square_pyramid();
/// Icosahedron with the golden ratio replaced by a close rational value.
CombPolytope icosahedron();
CombPolytope dodecahedron();

/// cube, tetrahedron, simplex4, octahedron, square_pyramid, pentagonal_pyramid,
/// icosahedron, dodecahedron, triangle, square, pentagon, hexagon.
std::optional<CombPolytope> by_name(const std::string& name);
std::vector<std::string> names();

}  // namespace qtoric::builtin
