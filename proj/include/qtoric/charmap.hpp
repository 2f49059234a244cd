#pragma once

// Characteristic, isotropy and F2-isotropy functions on polytopes.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qtoric/intlat.hpp"
#include "qtoric/polytope.hpp"

namespace qtoric {

struct ValidationReport {
  bool valid = true;
  std::vector<std::string> violations;
  std::vector<std::string> notes;

  void fail(std::string what) {
    valid = false;
    violations.push_back(std::move(what));
  }
};

/// Facet labels in Z^n / {+-1} over a simple n-polytope.
struct CharacteristicMap {
  CombPolytope polytope;
  std::vector<SignVec> assign;  // indexed by facet

  CharacteristicMap(CombPolytope p, std::vector<SignVec> a);
};

/// Facet labels in Z^{n-1} / {+-1} over an edge-simple n-polytope.
struct IsotropyMap {
  CombPolytope polytope;
  std::vector<SignVec> assign;

  IsotropyMap(CombPolytope p, std::vector<SignVec> a);
};

/// Facet labels in F2^rank; bit k of a label is its k-th coordinate.
/// rank n - 1 (the default) is the isotropy analogue, checked along edges;
/// rank n is the small-cover characteristic analogue, checked at vertices.
struct Mod2Map {
  CombPolytope polytope;
  std::vector<std::uint64_t> assign;
  int rank = 0;

  Mod2Map(CombPolytope p, std::vector<std::uint64_t> a, int rank = -1);
};

/// Checks the direct-summand condition on every facet set with a common vertex.
ValidationReport validate_characteristic(const CharacteristicMap& c);
/// Checks that the labels along every edge form a basis of Z^{n-1}.
ValidationReport validate_isotropy(const IsotropyMap& m);
ValidationReport validate_mod2(const Mod2Map& m);

/// Rank of a set of F2 vectors.
int f2_rank(std::vector<std::uint64_t> vs);

Mod2Map reduce_mod2(const IsotropyMap& m);

/// The characteristic map induced on the section cut at `base_vertex`.
/// Section facets carry the label of the base facet they come from.
CharacteristicMap restrict_to_section(const TruncatedPolytope& t, const IsotropyMap& m, int base_vertex);

/// Old facets get (label, 0), cut facets get (0, ..., 0, 1).
CharacteristicMap extend_to_characteristic(const TruncatedPolytope& t, const IsotropyMap& m);

struct IsotropySearch {
  std::optional<IsotropyMap> map;
  bool mod2_obstruction = false;
  int bound = 0;
  std::string certificate;  // "mod-2 obstruction", "none within bound", or "found"
};

/// Exhaustive F2 search first; if an F2 map exists, backtracking over
/// integer labels with entries bounded by `bound`.
IsotropySearch search_isotropy(const CombPolytope& p, int bound);
std::optional<Mod2Map> search_mod2(const CombPolytope& p);

}  // namespace qtoric
