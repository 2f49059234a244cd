// One line per acceptance criterion: PASS/FAIL, elapsed time, details.
// Exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "qtoric/boundary.hpp"
#include "qtoric/builtins.hpp"
#include "qtoric/charmap.hpp"
#include "qtoric/cobord4.hpp"
#include "qtoric/document.hpp"
#include "qtoric/witness.hpp"

using namespace qtoric;
namespace bi = qtoric::builtin;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void check(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

struct Criterion {
  int id;
  std::string name;
  double limit_s;
  std::function<Outcome()> run;
};

IsotropyMap by_name(const CombPolytope& p, const std::map<std::string, SignVec>& lab) {
  std::vector<SignVec> a;
  for (const auto& n : p.facet_names()) a.push_back(lab.at(n));
  return IsotropyMap(p, a);
}

IsotropyMap cube_map() {
  return by_name(bi::cube(), {{"x0", {1, 0}}, {"x1", {1, 0}}, {"y0", {0, 1}}, {"y1", {0, 1}}, {"z0", {1, 1}}, {"z1", {1, 1}}});
}

IsotropyMap pyramid_map() {
  return by_name(bi::square_pyramid(), {{"e1", {0, 1}}, {"e2", {1, 0}}, {"e3", {0, 1}}, {"e4", {1, 0}}, {"base", {1, 1}}});
}

Polygon4 hirz(long long k) { return Polygon4({{0, 1}, {1, 0}, {0, 1}, {1, k}}); }
const Polygon4 kTwoTerm({{0, 1}, {1, 0}, {-1, 1}, {1, -2}});

std::pair<int, int> triangle_signs(const std::vector<std::pair<int, PieceID>>& pieces, int& triangles, int& products) {
  int plus = 0, minus = 0;
  triangles = products = 0;
  for (const auto& [v, id] : pieces) {
    if (id.kind == PieceID::Kind::Triangle) {
      ++triangles;
      (id.triangle->sign > 0 ? plus : minus) += 1;
    } else if (id.kind == PieceID::Kind::ProductOfSpheres) {
      ++products;
    }
  }
  return {plus, minus};
}

Outcome cube_example() {
  Outcome o;
  const auto m = cube_map();
  const auto pieces = signed_piece_classes(build_boundary_model(m.polytope, m));
  int tri = 0, prod = 0;
  const auto [plus, minus] = triangle_signs(pieces, tri, prod);
  o.check(tri == 8, std::to_string(tri) + " triangle pieces");
  o.check(plus == 4 && minus == 4, "signs " + std::to_string(plus) + "/" + std::to_string(minus));
  if (o.ok) o.detail = "8 triangles, signs +4/-4";
  return o;
}

Outcome pyramid_example() {
  Outcome o;
  const auto m = pyramid_map();
  const auto b = build_boundary_model(m.polytope, m);
  int tri = 0, prod = 0;
  const auto [plus, minus] = triangle_signs(signed_piece_classes(b), tri, prod);
  o.check(tri == 4 && prod == 1, std::to_string(tri) + " triangles, " + std::to_string(prod) + " products");
  o.check(plus == 2 && minus == 2, "signs " + std::to_string(plus) + "/" + std::to_string(minus));
  const auto e = euler_report(b);
  o.check(e.chi == 8, "chi = " + std::to_string(e.chi));
  o.check(e.sum_h == 16 && 2 * e.chi == e.sum_h && e.cross_check, "sum h = " + std::to_string(e.sum_h));
  if (o.ok)
    o.detail = "4 triangles +2/-2, 1 product; chi = 8 = 16/2 (stopping the index sum at j = n-1 gives " +
               std::to_string(e.literal) + ")";
  return o;
}

void check_profile(Outcome& o, const std::string& name, const TruncatedPolytope& t, int n,
                   const std::function<HomologyProfile(std::uint64_t)>& at_seed) {
  const auto first = at_seed(1);
  for (const auto& [d, r] : first.ranks)
    if (r != 0) o.check(d == 0 || d % 2 == 1, name + ": rank " + std::to_string(r) + " in even degree " + std::to_string(d));
  o.check(first.ranks.count(2 * n - 1) && first.ranks.at(2 * n - 1) == 1, name + ": top rank is not 1");
  long long odd = 0;
  for (const auto& [d, r] : first.ranks)
    if (d % 2 == 1) odd += r;
  o.check(odd == static_cast<long long>(t.base.edges().size()),
          name + ": sum |I_j| = " + std::to_string(odd) + " vs " + std::to_string(t.base.edges().size()) + " edges");
  for (std::uint64_t seed = 2; seed <= 20; ++seed)
    o.check(at_seed(seed).ranks == first.ranks, name + ": ranks change at seed " + std::to_string(seed));
}

Outcome homology_ranks() {
  Outcome o;
  std::vector<std::pair<std::string, IsotropyMap>> models{{"cube", cube_map()}, {"square pyramid", pyramid_map()}};
  const auto oct = search_isotropy(bi::octahedron(), 2);
  o.check(oct.map.has_value(), "no isotropy map found for the octahedron");
  if (oct.map) models.emplace_back("octahedron", *oct.map);
  for (long long k = 1; k <= 5; ++k) models.emplace_back("P_" + std::to_string(k), witness_polytope(hirz(k)).iso);
  int count = 0;
  for (const auto& [name, m] : models) {
    check_profile(o, name, truncate_all_vertices(m.polytope), 3, [&, m = m](std::uint64_t seed) {
      BoundaryOptions opt;
      opt.seed = seed;
      return homology_relative(build_boundary_model(m.polytope, m, opt));
    });
    ++count;
  }
  // The pentagonal cone carries no isotropy map (mod-2 obstruction); its
  // ranks depend on the truncation's index data alone.
  const auto t = truncate_all_vertices(cone(bi::polygon(5)));
  check_profile(o, "cone(pentagon)", t, 3, [&](std::uint64_t seed) { return homology_profile(t, index_data(t, seed)); });
  ++count;
  if (o.ok) o.detail = std::to_string(count) + " models x 20 functionals; cone(pentagon) via index data only";
  return o;
}

Outcome hirzebruch_triviality() {
  Outcome o;
  for (long long k = -10; k <= 10; ++k) {
    const auto c = cobordism_class(hirz(k)).cls;
    o.check(c.is_zero(), "k = " + std::to_string(k) + " gives " + c.str());
  }
  if (o.ok) o.detail = "zero class for k = -10..10";
  return o;
}

Outcome two_term() {
  Outcome o;
  const auto c = cobordism_class(kTwoTerm).cls;
  o.check(c.terms().size() == 2, "class " + c.str());
  for (const auto& [cls, k] : c.terms()) o.check(k == 1, "class " + c.str());
  if (o.ok) o.detail = c.str();
  return o;
}

Outcome witness_pipeline() {
  Outcome o;
  std::vector<Polygon4> inputs{hirz(0), hirz(1), hirz(-1)};
  for (long long k = 2; k <= 5; ++k) {
    inputs.push_back(hirz(k));
    inputs.push_back(hirz(-k));
  }
  inputs.push_back(kTwoTerm);
  for (const auto& p : inputs) {
    const auto w = witness_polytope(p);
    o.check(is_edge_simple(w.polytope), p.str() + ": witness not edge-simple");
    o.check(validate_isotropy(w.iso).valid, p.str() + ": witness map invalid");
    const auto r = verify_witness(w, p);
    o.check(r.report.valid, p.str() + ": " + (r.report.violations.empty() ? "" : r.report.violations.front()));
    o.check(r.matched_vertex.has_value(), p.str() + ": no matching section");
    o.check(r.triangle_sum == cobordism_class(p).cls, p.str() + ": sum " + r.triangle_sum.str());
  }
  if (o.ok) o.detail = std::to_string(inputs.size()) + " squares (product, k = +-1..+-5, two-term)";
  return o;
}

Mat2 random_unimodular(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-3, 3);
  while (true) {
    Mat2 a{d(rng), d(rng), d(rng), d(rng)};
    if (boost::multiprecision::abs(a.det()) == 1) return a;
  }
}

Polygon4 transform(const Polygon4& p, const Mat2& a) {
  std::vector<SignVec> out;
  for (const auto& v : p.vecs()) out.push_back(a.apply(v));
  return Polygon4(out);
}

Int max_entry(const Polygon4& p) {
  Int m = 0;
  for (const auto& v : p.vecs())
    for (const auto& x : v.rep()) m = std::max(m, Int(boost::multiprecision::abs(x)));
  return m;
}

std::vector<Polygon4> random_polygons(std::uint64_t seed, int count, std::size_t max_m, long long bound) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coin(0, 1);
  std::vector<Polygon4> out;
  while (static_cast<int>(out.size()) < count) {
    Polygon4 p = coin(rng) ? transform(Polygon4({{1, 0}, {0, 1}, {1, 1}}), random_unimodular(rng))
                           : transform(hirz(std::uniform_int_distribution<int>(-4, 4)(rng)), random_unimodular(rng));
    const std::size_t target = std::uniform_int_distribution<std::size_t>(p.m(), max_m)(rng);
    while (p.m() < target) {
      const int i = std::uniform_int_distribution<int>(0, static_cast<int>(p.m()) - 1)(rng);
      p = inverse_blow_up(p, i, coin(rng) ? 1 : -1, coin(rng) ? 1 : -1);
    }
    if (max_entry(p) <= bound) out.push_back(p);
  }
  return out;
}

// Every class over all blow-down orders; `orders` counts the paths taken.
std::set<std::string> all_order_classes(const Polygon4& p, long long& orders) {
  std::set<std::string> out;
  std::vector<int> path;
  while (true) {
    std::vector<int> options;
    std::size_t depth = 0;
    const auto c = cobordism_class(p, [&](const Polygon4&, const std::vector<int>& adm) {
      if (depth >= path.size()) path.push_back(0);
      options.push_back(static_cast<int>(adm.size()));
      return adm[path[depth++]];
    });
    out.insert(c.cls.str());
    ++orders;
    path.resize(options.size());
    int d = static_cast<int>(path.size()) - 1;
    while (d >= 0 && path[d] + 1 >= options[d]) --d;
    if (d < 0) break;
    ++path[d];
    path.resize(d + 1);
  }
  return out;
}

Outcome confluence() {
  Outcome o;
  std::mt19937_64 rng(97);
  long long orders = 0;
  int splits = 0, exhaustive = 0;
  for (const auto& p : random_polygons(2024, 200, 10, 60)) {
    const auto base = cobordism_class(p);
    if (p.m() <= 7) {
      ++exhaustive;
      const auto all = all_order_classes(p, orders);
      o.check(all.size() == 1, p.str() + ": " + std::to_string(all.size()) + " distinct classes");
    } else {
      for (int t = 0; t < 20; ++t, ++orders) {
        const auto c = cobordism_class(p, [&](const Polygon4&, const std::vector<int>& adm) {
          return adm[std::uniform_int_distribution<std::size_t>(0, adm.size() - 1)(rng)];
        });
        o.check(c.cls == base.cls, p.str() + ": order-dependent class");
      }
    }
    // Each blow-down removes one side, each Hirzebruch split two.
    std::size_t removed = 0;
    for (const auto& s : base.trace.steps) {
      const bool split = s.kind == DecompStep::Kind::HirzebruchSplit;
      removed += split ? 2 : 1;
      splits += split;
    }
    o.check(p.m() == base.trace.terminal_polygon.m() + removed, p.str() + ": side count does not add up");
  }
  if (o.ok)
    o.detail = "200 polygons (" + std::to_string(exhaustive) + " exhaustive), " + std::to_string(orders) + " orders, " +
               std::to_string(splits) + " Hirzebruch splits in default traces";
  return o;
}

Outcome algebraic_identities() {
  Outcome o;
  std::vector<SignVec> prim;
  for (long long x = 0; x <= 5; ++x)
    for (long long y = -5; y <= 5; ++y) {
      if (x == 0 && y <= 0) continue;
      const SignVec v{x, y};
      if (v.primitive()) prim.push_back(v);
    }
  auto unimodular = [](const SignVec& a, const SignVec& b) { return boost::multiprecision::abs(det2(a, b)) == 1; };
  long long triangles = 0;
  for (const auto& a : prim)
    for (const auto& b : prim) {
      if (!unimodular(a, b)) continue;
      for (const auto& c : prim) {
        if (!unimodular(b, c) || !unimodular(c, a)) continue;
        const Polygon4 p({a, b, c});
        const auto cls = cobordism_class(p).cls;
        o.check(cobordism_class(p.reflected()).cls == cls.negated(), p.str() + ": reflection does not negate");
        for (std::size_t r = 1; r < 3; ++r) o.check(cobordism_class(p.rotated(r)).cls == cls, p.str() + ": rotation changes class");
        ++triangles;
      }
    }
  int polys = 0;
  for (const auto& p : random_polygons(77, 200, 10, 60)) {
    const auto cls = cobordism_class(p).cls;
    o.check(cobordism_class(p.reflected()).cls == cls.negated(), p.str() + ": reflection does not negate");
    for (std::size_t r = 1; r < p.m(); ++r) o.check(cobordism_class(p.rotated(r)).cls == cls, p.str() + ": rotation changes class");
    ++polys;
  }
  if (o.ok) o.detail = std::to_string(triangles) + " triangles with entries <= 5, " + std::to_string(polys) + " random polygons";
  return o;
}

Outcome nonexistence() {
  Outcome o;
  for (int n : {3, 4}) {
    const auto s = search_isotropy(bi::simplex(n), 3);
    o.check(!s.map, "simplex " + std::to_string(n) + ": a map was found");
    o.check(s.mod2_obstruction && s.certificate == "mod-2 obstruction",
            "simplex " + std::to_string(n) + ": certificate '" + s.certificate + "'");
  }
  if (o.ok) o.detail = "simplices of dimension 3 and 4: none, mod-2 obstruction";
  return o;
}

std::vector<std::pair<std::string, IsotropyMap>> isotropy_corpus() {
  std::vector<std::pair<std::string, IsotropyMap>> out{{"cube", cube_map()}, {"square pyramid", pyramid_map()}};
  for (const auto& entry : std::filesystem::directory_iterator(QTORIC_TEST_DATA)) {
    std::ifstream in(entry.path());
    std::stringstream ss;
    ss << in.rdbuf();
    try {
      auto d = parse_document_text(ss.str());
      if (d.kind == "isotropy") {
        const auto& m = std::get<IsotropyMap>(d.payload);
        if (validate_isotropy(m).valid) out.emplace_back(entry.path().filename().string(), m);
      }
    } catch (const Error&) {
    }
  }
  for (const auto& name : bi::names()) {
    const auto p = *bi::by_name(name);
    if (p.dim() != 3 || !is_edge_simple(p)) continue;
    if (auto s = search_isotropy(p, 2); s.map) out.emplace_back("search:" + name, *s.map);
  }
  for (long long k = -5; k <= 5; ++k) out.emplace_back("witness:" + hirz(k).str(), witness_polytope(hirz(k)).iso);
  out.emplace_back("witness:two-term", witness_polytope(kTwoTerm).iso);
  return out;
}

Outcome extension() {
  Outcome o;
  const auto corpus = isotropy_corpus();
  for (const auto& [name, m] : corpus) {
    const auto t = truncate_all_vertices(m.polytope);
    const auto c = extend_to_characteristic(t, m);
    const auto r = validate_characteristic(c);
    o.check(r.valid, name + ": " + (r.violations.empty() ? "" : r.violations.front()));
  }
  if (o.ok) o.detail = std::to_string(corpus.size()) + " isotropy maps extended and validated";
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "cube boundary pieces", 1, cube_example},
      {2, "square pyramid pieces and Euler characteristic", 1, pyramid_example},
      {3, "relative homology ranks", 5, homology_ranks},
      {4, "Hirzebruch triviality", 1, hirzebruch_triviality},
      {5, "two-term square", 1, two_term},
      {6, "witness pipeline", 5, witness_pipeline},
      {7, "confluence and decomposition", 30, confluence},
      {8, "reflection and rotation identities", 10, algebraic_identities},
      {9, "simplex nonexistence certificate", 1, nonexistence},
      {10, "characteristic extension", 5, extension},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.ok && s > c.limit_s) {
      o.ok = false;
      o.detail += " (over the " + std::to_string(static_cast<int>(c.limit_s)) + " s budget)";
    }
    failed += !o.ok;
    std::printf("%s %2d %-48s %8.3f s  %s\n", o.ok ? "PASS" : "FAIL", c.id, c.name.c_str(), s, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed;
}
