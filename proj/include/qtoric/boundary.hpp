#pragma once

// The manifold with quasitoric boundary over a vertex truncation: boundary
// pieces, relative homology ranks, Euler characteristic and piece signs.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qtoric/charmap.hpp"
#include "qtoric/cobord4.hpp"
#include "qtoric/polytope.hpp"

namespace qtoric {

struct BoundaryOptions {
  std::optional<Point> functional;
  std::uint64_t seed = 1;
  /// Admit bases of dimension other than 3 (orientation data is then omitted).
  bool experimental = false;
};

struct BoundaryModel {
  TruncatedPolytope trunc;
  IsotropyMap iso;
  std::map<int, CharacteristicMap> pieces;  // base vertex -> map over its section
  /// base vertex -> section labels in counter-clockwise order seen from
  /// outside the base polytope (dimension 3 only).
  std::map<int, Polygon4> oriented;
  std::optional<IndexData> index;  // absent without coordinates
  std::vector<std::string> notes;
};

/// Throws Error(NotEdgeSimple), Error(InvalidMap) or Error(Unsupported).
BoundaryModel build_boundary_model(const CombPolytope& p, const IsotropyMap& m, const BoundaryOptions& opt = {});

struct HomologyProfile {
  std::map<int, long long> ranks;  // degrees 0 .. 2n-1
};

/// Throws Error(Unsupported) when the model carries no index data.
HomologyProfile homology_relative(const BoundaryModel& b);
/// The same ranks from the truncation's index data alone.
HomologyProfile homology_profile(const TruncatedPolytope& t, const IndexData& index);

struct EulerReport {
  long long chi = 0;            // sum of section h-entries minus sum_{j=1..n} |I_j|
  long long sum_h = 0;          // sum over sections of their h-vector sums
  long long section_vertices = 0;
  long long index_total = 0;    // sum_{j=1..n} |I_j|
  long long literal = 0;        // sum_h minus sum_{j=1..n-1} |I_j|
  bool cross_check = false;     // chi == sum_h / 2 and sum_h == section_vertices
  std::vector<std::string> notes;
};

EulerReport euler_report(const BoundaryModel& b);
long long euler_characteristic(const BoundaryModel& b);

struct PieceID {
  enum class Kind { Triangle, Hirzebruch, ProductOfSpheres, Polygon, Unrecognized };
  Kind kind = Kind::Unrecognized;
  std::size_t m = 0;
  std::optional<SignedClass> triangle;
  Int k = 0;                     // hirzebruch
  std::optional<CobClass> cls;   // polygon pieces that classify
  std::string str() const;
};

const char* to_string(PieceID::Kind k);

/// The polygon's labels in cyclic order: counter-clockwise in the plane when
/// coordinates exist, otherwise starting at facet 0 towards its lower-indexed
/// neighbour. Throws Error(InvalidMap) if c is not a valid dimension-2 map.
Polygon4 cyclic_labels(const CharacteristicMap& c);
PieceID identify_piece(const CharacteristicMap& c);
PieceID identify_piece(const Polygon4& oriented);

/// identify_piece over every section, using the oriented label cycles.
std::vector<std::pair<int, PieceID>> signed_piece_classes(const BoundaryModel& b);

/// Sum of sign * class over triangle pieces.
CobClass signed_triangle_sum(const std::vector<std::pair<int, PieceID>>& pieces);

/// Mod-2 restrictions to every section. Throws Error(InvalidMap).
std::vector<std::pair<int, Mod2Map>> build_small_cover_boundary(const CombPolytope& p, const Mod2Map& m2);

/// Facet vertex cycles of a 3-polytope, oriented consistently; when
/// coordinates exist they run counter-clockwise seen from outside.
std::vector<std::vector<int>> oriented_facet_cycles(const CombPolytope& p);

}  // namespace qtoric
