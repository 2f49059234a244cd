#pragma once

#include <map>
#include <string>

#include "qtoric/builtins.hpp"
#include "qtoric/charmap.hpp"

namespace fixtures {

inline qtoric::IsotropyMap by_name(const qtoric::CombPolytope& p, const std::map<std::string, qtoric::SignVec>& lab) {
  std::vector<qtoric::SignVec> a;
  for (const auto& n : p.facet_names()) a.push_back(lab.at(n));
  return qtoric::IsotropyMap(p, a);
}

// Axis pairs get (1,0), (0,1), (1,1).
inline qtoric::IsotropyMap cube_map() {
  return by_name(qtoric::builtin::cube(),
                 {{"x0", {1, 0}}, {"x1", {1, 0}}, {"y0", {0, 1}}, {"y1", {0, 1}}, {"z0", {1, 1}}, {"z1", {1, 1}}});
}

// Slant facets alternate (0,1), (1,0); the base gets their sum.
inline qtoric::IsotropyMap pyramid_map() {
  return by_name(qtoric::builtin::square_pyramid(),
                 {{"e1", {0, 1}}, {"e2", {1, 0}}, {"e3", {0, 1}}, {"e4", {1, 0}}, {"base", {1, 1}}});
}

inline qtoric::CharacteristicMap polygon_map(const std::vector<qtoric::SignVec>& labels) {
  return qtoric::CharacteristicMap(qtoric::builtin::polygon(static_cast<int>(labels.size())), labels);
}

}  // namespace fixtures
