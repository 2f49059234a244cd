#include "qtoric/boundary.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace qtoric {

namespace {

Point sub(const Point& a, const Point& b) {
  Point out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] - b[k];
  return out;
}

Rational triple(const Point& a, const Point& b, const Point& n) {
  return (a[1] * b[2] - a[2] * b[1]) * n[0] + (a[2] * b[0] - a[0] * b[2]) * n[1] + (a[0] * b[1] - a[1] * b[0]) * n[2];
}

// Vertex cycle of facet f, walked from its least vertex.
std::vector<int> facet_cycle(const CombPolytope& p, int f) {
  std::map<int, std::vector<int>> nb;
  for (const auto& e : p.edges())
    if (std::binary_search(e.facets.begin(), e.facets.end(), f)) {
      nb[e.u].push_back(e.v);
      nb[e.v].push_back(e.u);
    }
  const auto& fv = p.facet_vertices(f);
  std::vector<int> cyc{*std::min_element(fv.begin(), fv.end())};
  int prev = -1;
  while (true) {
    const auto& ns = nb[cyc.back()];
    if (ns.size() != 2) throw Error(ErrorKind::Inconsistent, "facet " + p.facet_name(f) + " is not a polygon");
    int next = ns[0] != prev ? ns[0] : ns[1];
    if (prev == -1) next = std::min(ns[0], ns[1]);
    if (next == cyc.front()) break;
    prev = cyc.back();
    cyc.push_back(next);
    if (cyc.size() > fv.size()) throw Error(ErrorKind::Inconsistent, "facet " + p.facet_name(f) + " is not a cycle");
  }
  if (cyc.size() != fv.size()) throw Error(ErrorKind::Inconsistent, "facet " + p.facet_name(f) + " is not a cycle");
  return cyc;
}

bool has_arc(const std::vector<int>& cyc, int a, int b) {
  for (std::size_t i = 0; i < cyc.size(); ++i)
    if (cyc[i] == a && cyc[(i + 1) % cyc.size()] == b) return true;
  return false;
}

int successor(const std::vector<int>& cyc, int v, int step) {
  auto it = std::find(cyc.begin(), cyc.end(), v);
  const long long n = static_cast<long long>(cyc.size());
  return cyc[(((it - cyc.begin()) + step) % n + n) % n];
}

// Facets around v, counter-clockwise seen from outside.
std::vector<int> link_order(const CombPolytope& p, const std::vector<std::vector<int>>& cycles, int v) {
  const auto& fs = p.vertex_facets(v);
  std::vector<int> out{fs.front()};
  while (true) {
    const int f = out.back();
    const int a = successor(cycles[f], v, -1);
    const auto e = p.edge_between(a, v);
    const auto& ef = p.edges()[*e].facets;
    const int g = ef[0] != f ? ef[0] : ef[1];
    if (g == out.front()) break;
    out.push_back(g);
    if (out.size() > fs.size()) throw Error(ErrorKind::Inconsistent, "vertex link is not a cycle");
  }
  if (out.size() != fs.size()) throw Error(ErrorKind::Inconsistent, "vertex link is not a cycle");
  return out;
}

}  // namespace

std::vector<std::vector<int>> oriented_facet_cycles(const CombPolytope& p) {
  if (p.dim() != 3) throw Error(ErrorKind::Unsupported, "facet cycles need dimension 3");
  std::vector<std::vector<int>> cyc(p.num_facets());
  for (int f = 0; f < p.num_facets(); ++f) cyc[f] = facet_cycle(p, f);

  std::vector<char> done(p.num_facets(), 0);
  std::deque<int> queue{0};
  done[0] = 1;
  while (!queue.empty()) {
    const int f = queue.front();
    queue.pop_front();
    for (const auto& e : p.edges()) {
      if (!std::binary_search(e.facets.begin(), e.facets.end(), f) || e.facets.size() != 2) continue;
      const int g = e.facets[0] != f ? e.facets[0] : e.facets[1];
      const bool f_fwd = has_arc(cyc[f], e.u, e.v);
      const bool g_fwd = has_arc(cyc[g], e.u, e.v);
      if (done[g]) {
        if (f_fwd == g_fwd) throw Error(ErrorKind::Inconsistent, "facet cycles cannot be oriented consistently");
        continue;
      }
      if (f_fwd == g_fwd) std::reverse(cyc[g].begin(), cyc[g].end());
      done[g] = 1;
      queue.push_back(g);
    }
  }
  if (std::find(done.begin(), done.end(), 0) != done.end())
    throw Error(ErrorKind::Inconsistent, "facet adjacency is disconnected");

  if (p.has_coords()) {
    const auto& c = cyc[0];
    const Point d1 = sub(p.coord(c[1]), p.coord(c[0]));
    const Point d2 = sub(p.coord(c[2]), p.coord(c[1]));
    if (triple(d1, d2, p.facet_hyperplane(0).normal) < 0)
      for (auto& x : cyc) std::reverse(x.begin(), x.end());
  }
  return cyc;
}

BoundaryModel build_boundary_model(const CombPolytope& p, const IsotropyMap& m, const BoundaryOptions& opt) {
  if (p.dim() != 3 && !opt.experimental)
    throw Error(ErrorKind::Unsupported, "boundary models are built for dimension 3 (set experimental for others)");
  if (!is_edge_simple(p)) throw Error(ErrorKind::NotEdgeSimple, "every edge must lie in exactly n-1 facets");
  if (auto rep = validate_isotropy(m); !rep.valid) throw Error(ErrorKind::InvalidMap, rep.violations.front());

  TruncatedPolytope t = truncate_all_vertices(p);
  std::map<int, CharacteristicMap> pieces;
  std::vector<std::string> notes;
  for (int v = 0; v < p.num_vertices(); ++v) {
    auto c = restrict_to_section(t, m, v);
    if (auto rep = validate_characteristic(c); !rep.valid)
      notes.push_back("section at " + p.vertex_name(v) + ": " + rep.violations.front());
    pieces.emplace(v, std::move(c));
  }

  std::map<int, Polygon4> oriented;
  if (p.dim() == 3) {
    const auto cycles = oriented_facet_cycles(p);
    for (int v = 0; v < p.num_vertices(); ++v) {
      std::vector<SignVec> labels;
      for (int f : link_order(p, cycles, v)) labels.push_back(m.assign[f]);
      oriented.emplace(v, Polygon4(std::move(labels)));
    }
    if (!p.has_coords()) notes.push_back("no coordinates: piece signs are fixed up to one global flip");
  }

  std::optional<IndexData> index;
  if (t.q.has_coords())
    index = opt.functional ? index_data(t, *opt.functional) : index_data(t, opt.seed);
  else
    notes.push_back("no coordinates: index data unavailable");

  return BoundaryModel{std::move(t), m, std::move(pieces), std::move(oriented), std::move(index), std::move(notes)};
}

HomologyProfile homology_profile(const TruncatedPolytope& t, const IndexData& index) {
  const int n = t.q.dim();
  HomologyProfile h;
  for (int d = 0; d <= 2 * n - 1; ++d) h.ranks[d] = 0;
  h.ranks[0] = 1;
  for (int j = 1; j <= n; ++j) h.ranks[2 * j - 1] = static_cast<long long>(index.cells[j].size());
  return h;
}

HomologyProfile homology_relative(const BoundaryModel& b) {
  if (!b.index) throw Error(ErrorKind::Unsupported, "relative homology needs index data (coordinates)");
  return homology_profile(b.trunc, *b.index);
}

EulerReport euler_report(const BoundaryModel& b) {
  EulerReport r;
  const int n = b.trunc.q.dim();
  for (const auto& [v, c] : b.pieces) {
    for (long long x : h_vector(c.polytope)) r.sum_h += x;
    r.section_vertices += c.polytope.num_vertices();
  }
  long long top = 1;
  if (b.index) {
    r.index_total = 0;
    for (int j = 1; j <= n; ++j) r.index_total += static_cast<long long>(b.index->cells[j].size());
    top = static_cast<long long>(b.index->cells[n].size());
    if (r.index_total != static_cast<long long>(b.trunc.base.edges().size()))
      r.notes.push_back("sum of |I_j| differs from the edge count of the base");
  } else {
    r.index_total = static_cast<long long>(b.trunc.base.edges().size());
    r.notes.push_back("no index data: sum of |I_j| taken as the edge count of the base");
  }
  r.chi = r.sum_h - r.index_total;
  r.literal = r.sum_h - (r.index_total - top);
  r.cross_check = r.sum_h % 2 == 0 && r.chi == r.sum_h / 2 && r.sum_h == r.section_vertices;
  r.notes.push_back("chi subtracts |I_j| for j = 1..n; the variant stopping at j = n-1 gives " + std::to_string(r.literal));
  if (!r.cross_check) r.notes.push_back("cross-check chi(W) = chi(boundary)/2 failed");
  return r;
}

long long euler_characteristic(const BoundaryModel& b) { return euler_report(b).chi; }

const char* to_string(PieceID::Kind k) {
  switch (k) {
    case PieceID::Kind::Triangle: return "triangle";
    case PieceID::Kind::Hirzebruch: return "hirzebruch";
    case PieceID::Kind::ProductOfSpheres: return "product_of_spheres";
    case PieceID::Kind::Polygon: return "polygon";
    case PieceID::Kind::Unrecognized: return "unrecognized";
  }
  return "?";
}

std::string PieceID::str() const {
  std::ostringstream os;
  os << to_string(kind);
  switch (kind) {
    case Kind::Triangle: os << '(' << triangle->cls.str() << ", " << (triangle->sign > 0 ? "+1" : "-1") << ')'; break;
    case Kind::Hirzebruch: os << '(' << k << ')'; break;
    case Kind::Polygon: os << '(' << m << (cls ? ", " + cls->str() : std::string()) << ')'; break;
    default: break;
  }
  return os.str();
}

Polygon4 cyclic_labels(const CharacteristicMap& c) {
  const auto& p = c.polytope;
  if (p.dim() != 2) throw Error(ErrorKind::DimensionMismatch, "pieces are polygons");
  if (auto rep = validate_characteristic(c); !rep.valid) throw Error(ErrorKind::InvalidMap, rep.violations.front());
  const int m = p.num_facets();
  // Facet adjacency through shared vertices.
  std::vector<std::vector<int>> adj(m);
  for (int v = 0; v < p.num_vertices(); ++v) {
    const auto& fs = p.vertex_facets(v);
    adj[fs[0]].push_back(fs[1]);
    adj[fs[1]].push_back(fs[0]);
  }
  std::vector<int> order{0};
  int prev = -1;
  while (true) {
    const auto& ns = adj[order.back()];
    if (ns.size() != 2) throw Error(ErrorKind::Inconsistent, "polygon facets do not form a cycle");
    int next = prev == -1 ? std::min(ns[0], ns[1]) : (ns[0] != prev ? ns[0] : ns[1]);
    if (next == order.front()) break;
    prev = order.back();
    order.push_back(next);
    if (static_cast<int>(order.size()) > m) throw Error(ErrorKind::Inconsistent, "polygon facets do not form a cycle");
  }
  if (static_cast<int>(order.size()) != m) throw Error(ErrorKind::Inconsistent, "polygon facets do not form a cycle");

  if (p.has_coords()) {
    // Vertex shared by consecutive facets, then the shoelace sign.
    auto shared = [&](int f, int g) {
      for (int v : p.facet_vertices(f))
        if (p.facet_contains(g, v)) return v;
      throw Error(ErrorKind::Inconsistent, "adjacent facets share no vertex");
    };
    Rational area = 0;
    for (int i = 0; i < m; ++i) {
      const auto& a = p.coord(shared(order[i], order[(i + 1) % m]));
      const auto& b = p.coord(shared(order[(i + 1) % m], order[(i + 2) % m]));
      area += a[0] * b[1] - a[1] * b[0];
    }
    if (area < 0) std::reverse(order.begin() + 1, order.end());
  }
  std::vector<SignVec> labels;
  for (int f : order) labels.push_back(c.assign[f]);
  return Polygon4(std::move(labels));
}

PieceID identify_piece(const Polygon4& poly) {
  if (auto rep = validate_polygon(poly); !rep.valid) throw Error(ErrorKind::InvalidMap, rep.violations.front());
  PieceID id;
  id.m = poly.m();
  if (poly.m() == 3) {
    id.kind = PieceID::Kind::Triangle;
    id.triangle = canonical_triangle_class(TriangleData(poly.at(0), poly.at(1), poly.at(2)));
    return id;
  }
  if (poly.m() == 4) {
    if (auto k = is_hirzebruch(poly)) {
      id.kind = *k == 0 ? PieceID::Kind::ProductOfSpheres : PieceID::Kind::Hirzebruch;
      id.k = *k;
      return id;
    }
  }
  try {
    id.cls = cobordism_class(poly).cls;
    id.kind = PieceID::Kind::Polygon;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Unclassifiable) throw;
    id.kind = PieceID::Kind::Unrecognized;
  }
  return id;
}

PieceID identify_piece(const CharacteristicMap& c) { return identify_piece(cyclic_labels(c)); }

std::vector<std::pair<int, PieceID>> signed_piece_classes(const BoundaryModel& b) {
  std::vector<std::pair<int, PieceID>> out;
  for (const auto& [v, c] : b.pieces) {
    auto it = b.oriented.find(v);
    out.emplace_back(v, it != b.oriented.end() ? identify_piece(it->second) : identify_piece(c));
  }
  return out;
}

CobClass signed_triangle_sum(const std::vector<std::pair<int, PieceID>>& pieces) {
  CobClass out;
  for (const auto& [v, id] : pieces)
    if (id.kind == PieceID::Kind::Triangle) out.add(*id.triangle);
  return out;
}

std::vector<std::pair<int, Mod2Map>> build_small_cover_boundary(const CombPolytope& p, const Mod2Map& m2) {
  if (m2.rank != p.dim() - 1) throw Error(ErrorKind::DimensionMismatch, "expected an F2 isotropy map of rank n-1");
  if (auto rep = validate_mod2(m2); !rep.valid) throw Error(ErrorKind::InvalidMap, rep.violations.front());
  const TruncatedPolytope t = truncate_all_vertices(p);
  std::vector<std::pair<int, Mod2Map>> out;
  for (int v = 0; v < p.num_vertices(); ++v) {
    Section s = t.section(v);
    std::vector<std::uint64_t> labels;
    for (int f : s.base_facet) labels.push_back(m2.assign[f]);
    out.emplace_back(v, Mod2Map(std::move(s.polytope), std::move(labels), m2.rank));
  }
  return out;
}

}  // namespace qtoric
