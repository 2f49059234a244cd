#pragma once

// Edge-simple 3-polytopes whose boundary model exhibits a cobordism between
// a square's manifold and a union of triangle pieces.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qtoric/boundary.hpp"
#include "qtoric/cobord4.hpp"

namespace qtoric {

struct Witness {
  CombPolytope polytope;
  IsotropyMap iso;
  std::string pattern;  // "product", "hirzebruch(k)" or "two-term"
  Mat2 frame;           // some rotation of input * frame is the normalized square
};

/// Body {(x, y, z) : (x, z) in a polygon, |y| <= z} with apex O at the origin,
/// facets A (y = -z), B (x = z), C (y = z), D (x = -z) around O and a chain
/// of facets c1..cr. Accepts squares that normalize to
///   ((0,1),(1,0),(0,1),(1,k)), k >= 0, or ((0,1),(1,0),(-1,1),(1,-2)).
/// Every rotation of the input is tried. Throws Error(PatternNotMatched)
/// otherwise.
Witness witness_polytope(const Polygon4& p);

struct WitnessReport {
  ValidationReport report;
  std::vector<std::pair<int, PieceID>> pieces;
  std::optional<int> matched_vertex;  // section equal to p up to dihedral relabeling
  int plus = 0;                       // triangle signs outside the matched section
  int minus = 0;
  CobClass triangle_sum;
  CobClass expected;                  // cobordism_class(p)
};

WitnessReport verify_witness(const CombPolytope& polytope, const IsotropyMap& iso, const Polygon4& p);
inline WitnessReport verify_witness(const Witness& w, const Polygon4& p) { return verify_witness(w.polytope, w.iso, p); }

}  // namespace qtoric
