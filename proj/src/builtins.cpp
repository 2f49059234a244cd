#include "qtoric/builtins.hpp"

#include <array>
#include <cmath>
#include <map>

namespace qtoric::builtin {

CombPolytope polygon(int m) {
  if (m < 3) throw Error(ErrorKind::Inconsistent, "a polygon needs at least 3 sides");
  std::vector<std::string> vnames, fnames;
  std::vector<std::vector<int>> fverts;
  std::vector<Point> pts;
  for (int i = 0; i < m; ++i) {
    vnames.push_back("v" + std::to_string(i + 1));
    fnames.push_back("e" + std::to_string(i + 1));
    fverts.push_back({i, (i + 1) % m});
    pts.push_back({Rational(i), Rational(i * i)});
  }
  return CombPolytope(2, std::move(vnames), std::move(fnames), std::move(fverts), std::move(pts));
}

CombPolytope cube() {
  std::vector<std::string> vnames;
  std::vector<Point> pts;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int z = 0; z < 2; ++z) {
        vnames.push_back("v" + std::to_string(x) + std::to_string(y) + std::to_string(z));
        pts.push_back({Rational(x), Rational(y), Rational(z)});
      }
  std::vector<std::string> fnames;
  std::vector<std::vector<int>> fverts;
  const char axis[] = {'x', 'y', 'z'};
  for (int k = 0; k < 3; ++k)
    for (int side = 0; side < 2; ++side) {
      fnames.push_back(std::string(1, axis[k]) + std::to_string(side));
      auto& fv = fverts.emplace_back();
      for (int v = 0; v < 8; ++v)
        if (((v >> (2 - k)) & 1) == side) fv.push_back(v);
    }
  return CombPolytope(3, std::move(vnames), std::move(fnames), std::move(fverts), std::move(pts));
}

CombPolytope simplex(int n) {
  std::vector<std::string> vnames, fnames;
  std::vector<Point> pts;
  std::vector<std::vector<int>> fverts;
  for (int i = 0; i <= n; ++i) {
    vnames.push_back("p" + std::to_string(i));
    Point p(n, Rational(0));
    if (i > 0) p[i - 1] = 1;
    pts.push_back(std::move(p));
    fnames.push_back("f" + std::to_string(i));
    auto& fv = fverts.emplace_back();
    for (int j = 0; j <= n; ++j)
      if (j != i) fv.push_back(j);
  }
  return CombPolytope(n, std::move(vnames), std::move(fnames), std::move(fverts), std::move(pts));
}

CombPolytope octahedron() { return suspension(polygon(4)); }

CombPolytope square_pyramid() { return cone(polygon(4)); }

CombPolytope icosahedron() {
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  const Rational phi_q(1618034, 1000000);
  std::vector<std::array<double, 3>> approx;
  std::vector<Point> pts;
  std::vector<std::string> vnames;
  for (int a : {-1, 1})
    for (int b : {-1, 1}) {
      approx.push_back({0, double(a), b * phi});
      pts.push_back({Rational(0), Rational(a), b * phi_q});
      approx.push_back({double(a), b * phi, 0});
      pts.push_back({Rational(a), b * phi_q, Rational(0)});
      approx.push_back({b * phi, 0, double(a)});
      pts.push_back({b * phi_q, Rational(0), Rational(a)});
    }
  for (std::size_t i = 0; i < pts.size(); ++i) vnames.push_back("i" + std::to_string(i));
  auto near = [&](std::size_t i, std::size_t j) {
    double d = 0;
    for (int k = 0; k < 3; ++k) d += (approx[i][k] - approx[j][k]) * (approx[i][k] - approx[j][k]);
    return std::abs(d - 4.0) < 1e-6;
  };
  std::vector<std::string> fnames;
  std::vector<std::vector<int>> fverts;
  for (std::size_t i = 0; i < 12; ++i)
    for (std::size_t j = i + 1; j < 12; ++j)
      for (std::size_t k = j + 1; k < 12; ++k)
        if (near(i, j) && near(j, k) && near(i, k)) {
          fnames.push_back("t" + std::to_string(fverts.size()));
          fverts.push_back({int(i), int(j), int(k)});
        }
  return CombPolytope(3, std::move(vnames), std::move(fnames), std::move(fverts), std::move(pts));
}

CombPolytope dodecahedron() { return polar_incidence(icosahedron()); }

std::optional<CombPolytope> by_name(const std::string& name) {
  static const std::map<std::string, int> polygons{{"triangle", 3}, {"square", 4}, {"pentagon", 5}, {"hexagon", 6}};
  if (auto it = polygons.find(name); it != polygons.end()) return polygon(it->second);
  if (name == "cube") return cube();
  if (name == "tetrahedron") return simplex(3);
  if (name == "simplex4") return simplex(4);
  if (name == "octahedron") return octahedron();
  if (name == "square_pyramid") return square_pyramid();
  if (name == "pentagonal_pyramid") return cone(polygon(5));
  if (name == "icosahedron") return icosahedron();
  if (name == "dodecahedron") return dodecahedron();
  return std::nullopt;
}

std::vector<std::string> names() {
  return {"triangle",   "square",         "pentagon",           "hexagon",     "cube",        "tetrahedron",
          "simplex4",   "octahedron",     "square_pyramid",     "pentagonal_pyramid", "icosahedron", "dodecahedron"};
}

}  // namespace qtoric::builtin
