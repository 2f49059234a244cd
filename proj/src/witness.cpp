#include "qtoric/witness.hpp"

#include <array>

namespace qtoric {

namespace {

struct Layout {
  std::array<SignVec, 4> around_o;  // facets A, B, C, D
  std::vector<SignVec> chain;       // c1..cr
  std::string pattern;
};

SignVec v2(const Int& a, const Int& b) { return SignVec(IntVec{a, b}); }

// Labels in the normalized frame, or nothing when q is not a known pattern.
std::optional<Layout> match_layout(const Polygon4& q) {
  const SignVec e1 = v2(0, 1), e2 = v2(1, 0);
  if (q.at(0) != e1 || q.at(1) != e2) return std::nullopt;
  const auto& c = q.at(2);
  const auto& d = q.at(3);
  if (c == e1 && d == e2) return Layout{{e1, e2, e1, e2}, {v2(1, 1)}, "product"};
  if (c == e1 && d[0] == 1 && d[1] > 0) {
    const Int k = d[1];
    std::vector<SignVec> chain;
    for (Int j = 1; j < k; ++j) chain.push_back(v2(1, j));
    chain.push_back(d);
    chain.push_back(v2(1, k - 1));
    return Layout{{e1, e2, e1, d}, std::move(chain), "hirzebruch(" + k.str() + ")"};
  }
  if (c == v2(-1, 1) && d == v2(1, -2)) return Layout{{e2, c, d, e1}, {e1, c}, "two-term"};
  return std::nullopt;
}

CombPolytope body(std::size_t r, bool mirror) {
  // Chain points on z = 3 - 2x^2 from (1, 1) to (-1, 1).
  std::vector<std::string> minus, plus;
  for (std::size_t i = 0; i <= r; ++i) {
    if (i == 0) {
      minus.push_back("H");
      plus.push_back("I");
    } else if (i == r) {
      minus.push_back("G");
      plus.push_back("J");
    } else if (r == 2) {
      minus.push_back("E");
      plus.push_back("F");
    } else {
      minus.push_back("E" + std::to_string(i));
      plus.push_back("F" + std::to_string(i));
    }
  }
  std::vector<std::string> names{"O"};
  std::vector<Point> coords{{0, 0, 0}};
  for (std::size_t i = 0; i <= r; ++i) {
    Rational x = Rational(1) - Rational(2 * static_cast<long long>(i), static_cast<long long>(r));
    Rational z = 3 - 2 * x * x;
    if (mirror) x = -x;
    names.push_back(minus[i]);
    coords.push_back({x, -z, z});
    names.push_back(plus[i]);
    coords.push_back({x, z, z});
  }
  auto mi = [](std::size_t i) { return static_cast<int>(1 + 2 * i); };
  auto pl = [](std::size_t i) { return static_cast<int>(2 + 2 * i); };

  std::vector<std::string> fnames{"A", "B", "C", "D"};
  std::vector<std::vector<int>> fverts(4);
  fverts[0].push_back(0);
  fverts[2].push_back(0);
  for (std::size_t i = 0; i <= r; ++i) {
    fverts[0].push_back(mi(i));
    fverts[2].push_back(pl(i));
  }
  fverts[1] = {0, mi(0), pl(0)};
  fverts[3] = {0, mi(r), pl(r)};
  for (std::size_t i = 0; i < r; ++i) {
    fnames.push_back("c" + std::to_string(i + 1));
    fverts.push_back({mi(i), pl(i), mi(i + 1), pl(i + 1)});
  }
  return CombPolytope(3, std::move(names), std::move(fnames), std::move(fverts), std::move(coords));
}

bool matches_rotation(const Polygon4& a, const Polygon4& b) {
  if (a.m() != b.m()) return false;
  for (std::size_t r = 0; r < b.m(); ++r)
    if (a == b.rotated(r)) return true;
  return false;
}

std::optional<Witness> witness_in_position(const Polygon4& p) {
  const std::pair<SignVec, SignVec> first[] = {{p.at(0), v2(0, 1)}, {p.at(1), v2(1, 0)}};
  const auto a = solve_gl2(first);
  if (!a) return std::nullopt;

  for (const Mat2& frame : {*a, *a * Mat2{-1, 0, 0, 1}}) {
    std::vector<SignVec> q;
    for (const auto& v : p.vecs()) q.push_back(frame.apply(v));
    auto layout = match_layout(Polygon4(q));
    if (!layout) continue;

    const Mat2 back = *frame.inverse();
    std::vector<SignVec> labels;
    for (const auto& v : layout->around_o) labels.push_back(back.apply(v));
    for (const auto& v : layout->chain) labels.push_back(back.apply(v));

    for (bool mirror : {false, true}) {
      CombPolytope poly = body(layout->chain.size(), mirror);
      IsotropyMap iso(poly, labels);
      auto model = build_boundary_model(poly, iso);
      if (matches_rotation(model.oriented.at(0), p.reflected()) || mirror)
        return Witness{std::move(poly), std::move(iso), layout->pattern, frame};
    }
  }
  return std::nullopt;
}

}  // namespace

Witness witness_polytope(const Polygon4& p) {
  if (p.m() != 4) throw Error(ErrorKind::PatternNotMatched, "witnesses are built for squares");
  if (auto rep = validate_polygon(p); !rep.valid) throw Error(ErrorKind::InvalidMap, rep.violations.front());
  for (std::size_t r = 0; r < 4; ++r)
    if (auto w = witness_in_position(p.rotated(r))) return std::move(*w);
  throw Error(ErrorKind::PatternNotMatched, "square " + p.str() + " matches none of the witness patterns");
}

WitnessReport verify_witness(const CombPolytope& polytope, const IsotropyMap& iso, const Polygon4& p) {
  WitnessReport w;
  auto& r = w.report;
  if (!is_edge_simple(polytope)) r.fail("polytope is not edge-simple");
  if (auto rep = validate_isotropy(iso); !rep.valid)
    for (auto& v : rep.violations) r.fail("isotropy: " + v);
  if (!r.valid) return w;

  try {
    w.expected = cobordism_class(p).cls;
  } catch (const Error& e) {
    r.fail(std::string("input square: ") + e.what());
    return w;
  }

  std::optional<BoundaryModel> model;
  try {
    model = build_boundary_model(polytope, iso);
  } catch (const Error& e) {
    r.fail(std::string("boundary model: ") + e.what());
    return w;
  }
  w.pieces = signed_piece_classes(*model);

  int matches = 0;
  for (const auto& [v, poly] : model->oriented)
    if (equivariantly_equal(poly, p, EqualityMode::Dihedral)) {
      ++matches;
      w.matched_vertex = v;
    }
  if (matches != 1) {
    r.fail(std::to_string(matches) + " sections match the input square");
    w.matched_vertex.reset();
  }

  for (const auto& [v, id] : w.pieces) {
    if (w.matched_vertex && v == *w.matched_vertex) continue;
    if (id.kind != PieceID::Kind::Triangle) {
      r.fail("section at " + polytope.vertex_name(v) + " is " + id.str() + ", expected a triangle");
      continue;
    }
    (id.triangle->sign > 0 ? w.plus : w.minus) += 1;
    w.triangle_sum.add(*id.triangle);
  }

  Int pos = 0, neg = 0;
  for (const auto& [c, k] : w.expected.terms()) (k > 0 ? pos : neg) += boost::multiprecision::abs(k);
  if (Int(w.plus) - pos != Int(w.minus) - neg)
    r.fail("triangle signs do not balance: " + std::to_string(w.plus) + " positive, " + std::to_string(w.minus) +
           " negative against class " + w.expected.str());
  if (w.triangle_sum != w.expected)
    r.fail("signed triangle sum " + w.triangle_sum.str() + " differs from the class " + w.expected.str());
  return w;
}

}  // namespace qtoric
