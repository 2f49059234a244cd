#pragma once

// Combinatorial convex polytopes given by facet-vertex incidence, with
// optional rational coordinates.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qtoric/error.hpp"

namespace qtoric {

using Rational = boost::multiprecision::cpp_rational;
using Point = std::vector<Rational>;

/// Outward facet inequality: normal . x <= offset on the polytope.
struct Hyperplane {
  Point normal;
  Rational offset;
};

struct EdgeRec {
  int u = 0;
  int v = 0;
  std::vector<int> facets;  // sorted facet indices containing both ends
};

class CombPolytope {
 public:
  /// Validates the incidence data (and coordinates, when given) and derives
  /// the edge graph. Throws Error(Inconsistent) on malformed input.
  CombPolytope(int dim, std::vector<std::string> vertex_names, std::vector<std::string> facet_names,
               std::vector<std::vector<int>> facet_vertices, std::optional<std::vector<Point>> coords = {});

  /// Name-based construction, as used by the document reader.
  static CombPolytope from_names(int dim, const std::vector<std::string>& vertices,
                                 const std::vector<std::pair<std::string, std::vector<std::string>>>& facets,
                                 const std::optional<std::map<std::string, Point>>& coords = {});

  int dim() const { return dim_; }
  int num_vertices() const { return static_cast<int>(vertex_names_.size()); }
  int num_facets() const { return static_cast<int>(facet_names_.size()); }

  const std::string& vertex_name(int v) const { return vertex_names_.at(v); }
  const std::string& facet_name(int f) const { return facet_names_.at(f); }
  const std::vector<std::string>& vertex_names() const { return vertex_names_; }
  const std::vector<std::string>& facet_names() const { return facet_names_; }
  std::optional<int> vertex_index(const std::string& name) const;
  std::optional<int> facet_index(const std::string& name) const;

  const std::vector<int>& facet_vertices(int f) const { return facet_vertices_.at(f); }
  const std::vector<int>& vertex_facets(int v) const { return vertex_facets_.at(v); }
  bool facet_contains(int f, int v) const;

  const std::vector<EdgeRec>& edges() const { return edges_; }
  /// Edge indices incident to v.
  const std::vector<int>& vertex_edges(int v) const { return vertex_edges_.at(v); }
  /// Index of the edge joining u and v, if any.
  std::optional<int> edge_between(int u, int v) const;

  bool has_coords() const { return coords_.has_value(); }
  const Point& coord(int v) const { return coords_->at(v); }
  const std::vector<Point>& coords() const { return *coords_; }
  Point centroid() const;
  /// Requires coordinates.
  const Hyperplane& facet_hyperplane(int f) const { return hyperplanes_.at(f); }

  CombPolytope without_coords() const;

 private:
  void derive_edges();
  void validate_coords();

  int dim_ = 0;
  std::vector<std::string> vertex_names_;
  std::vector<std::string> facet_names_;
  std::vector<std::vector<int>> facet_vertices_;
  std::vector<std::vector<int>> vertex_facets_;
  std::vector<EdgeRec> edges_;
  std::vector<std::vector<int>> vertex_edges_;
  std::optional<std::vector<Point>> coords_;
  std::vector<Hyperplane> hyperplanes_;
};

const std::vector<EdgeRec>& edges(const CombPolytope& p);
bool is_simple(const CombPolytope& p);
bool is_edge_simple(const CombPolytope& p);

/// Pyramid over a simple polytope; the apex sits one unit above the
/// centroid when coordinates are present.
CombPolytope cone(const CombPolytope& p);
/// Bipyramid over a polygon.
CombPolytope suspension(const CombPolytope& polygon);
/// Polar of a 3-polytope by incidence transposition.
CombPolytope dual3(const CombPolytope& p);
/// Incidence transposition without preconditions.
CombPolytope polar_incidence(const CombPolytope& p);

/// Two polytopes are incidence-isomorphic (brute force over vertex maps
/// guided by facet sizes; meant for small inputs).
bool incidence_isomorphic(const CombPolytope& a, const CombPolytope& b);

/// Number of faces of each dimension 0..n-1 of a simple polytope.
std::vector<long long> f_vector(const CombPolytope& p);
/// h-vector of a simple polytope, h_0..h_n.
std::vector<long long> h_vector(const CombPolytope& p);

/// A vertex figure of the truncation, viewed as a polytope of one lower dimension.
struct Section {
  CombPolytope polytope;
  std::vector<int> base_facet;  // section facet -> base facet
  std::vector<int> q_vertex;    // section vertex -> vertex of the truncation
};

/// Result of cutting every vertex of an edge-simple polytope.
struct TruncatedPolytope {
  CombPolytope base;
  CombPolytope q;
  std::vector<int> new_facets;  // base vertex -> facet of q cut out at that vertex
  std::vector<int> old_facets;  // base facet -> facet of q
  std::vector<int> pedge_of;    // q vertex -> base edge it lies on
  std::vector<int> corner_of;   // q vertex -> base vertex it was cut near

  Section section(int base_vertex) const;
};

TruncatedPolytope truncate_all_vertices(const CombPolytope& p);

/// Morse-style index data of a truncation under a generic linear functional.
struct IndexData {
  Point functional;
  std::vector<Rational> value;  // q vertex -> functional value
  std::vector<int> ind;         // q vertex -> number of inward edges
  /// cells[j], j = 0..n: pairs (q vertex, inward q edge lying on a base edge) with ind = j.
  std::vector<std::vector<std::pair<int, int>>> cells;

  std::vector<std::size_t> cell_counts() const;
};

IndexData index_data(const TruncatedPolytope& t, const Point& functional);
/// Draws random integer functionals from the seed until one is generic.
IndexData index_data(const TruncatedPolytope& t, std::uint64_t seed);

}  // namespace qtoric
