#include "qtoric/polytope.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace qtoric {

namespace {

Rational dot(const Point& a, const Point& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Basis of the right null space of a rational matrix.
std::vector<Point> nullspace(std::vector<Point> m, std::size_t cols) {
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[r], m[p]);
    Rational inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }
  std::vector<Point> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (std::find(pivot_col.begin(), pivot_col.end(), static_cast<int>(free)) != pivot_col.end()) continue;
    Point v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -m[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<int> intersect_sorted(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

[[noreturn]] void inconsistent(const std::string& what) { throw Error(ErrorKind::Inconsistent, what); }

std::string unique_name(const std::vector<std::string>& taken, std::string name) {
  while (std::find(taken.begin(), taken.end(), name) != taken.end()) name += "'";
  return name;
}

}  // namespace

// ---------------------------------------------------------------------------

CombPolytope::CombPolytope(int dim, std::vector<std::string> vertex_names, std::vector<std::string> facet_names,
                           std::vector<std::vector<int>> facet_vertices, std::optional<std::vector<Point>> coords)
    : dim_(dim),
      vertex_names_(std::move(vertex_names)),
      facet_names_(std::move(facet_names)),
      facet_vertices_(std::move(facet_vertices)),
      coords_(std::move(coords)) {
  if (dim_ < 2) inconsistent("polytopes of dimension <= 1 are not supported");
  if (facet_names_.size() != facet_vertices_.size()) inconsistent("facet name count differs from facet count");
  {
    std::set<std::string> seen(vertex_names_.begin(), vertex_names_.end());
    if (seen.size() != vertex_names_.size()) inconsistent("duplicate vertex id");
    std::set<std::string> fseen(facet_names_.begin(), facet_names_.end());
    if (fseen.size() != facet_names_.size()) inconsistent("duplicate facet id");
  }
  const int nv = num_vertices();
  vertex_facets_.assign(nv, {});
  for (int f = 0; f < num_facets(); ++f) {
    auto& fv = facet_vertices_[f];
    std::sort(fv.begin(), fv.end());
    fv.erase(std::unique(fv.begin(), fv.end()), fv.end());
    if (fv.empty()) inconsistent("facet '" + facet_names_[f] + "' has no vertices");
    for (int v : fv) {
      if (v < 0 || v >= nv) inconsistent("facet '" + facet_names_[f] + "' references an unknown vertex");
      vertex_facets_[v].push_back(f);
    }
  }
  for (int v = 0; v < nv; ++v)
    if (static_cast<int>(vertex_facets_[v].size()) < dim_)
      inconsistent("vertex '" + vertex_names_[v] + "' lies in fewer than " + std::to_string(dim_) + " facets");
  for (int f = 0; f < num_facets(); ++f)
    for (int g = 0; g < num_facets(); ++g)
      if (f != g && std::includes(facet_vertices_[g].begin(), facet_vertices_[g].end(), facet_vertices_[f].begin(),
                                  facet_vertices_[f].end()))
        inconsistent("facet '" + facet_names_[f] + "' is contained in facet '" + facet_names_[g] + "'");
  derive_edges();
  if (coords_) validate_coords();
}

CombPolytope CombPolytope::from_names(int dim, const std::vector<std::string>& vertices,
                                      const std::vector<std::pair<std::string, std::vector<std::string>>>& facets,
                                      const std::optional<std::map<std::string, Point>>& coords) {
  std::map<std::string, int> idx;
  for (std::size_t i = 0; i < vertices.size(); ++i) idx[vertices[i]] = static_cast<int>(i);
  std::vector<std::string> fnames;
  std::vector<std::vector<int>> fverts;
  for (const auto& [name, vs] : facets) {
    fnames.push_back(name);
    auto& out = fverts.emplace_back();
    for (const auto& v : vs) {
      auto it = idx.find(v);
      if (it == idx.end()) inconsistent("facet '" + name + "' references unknown vertex '" + v + "'");
      out.push_back(it->second);
    }
  }
  std::optional<std::vector<Point>> pts;
  if (coords) {
    pts.emplace();
    for (const auto& v : vertices) {
      auto it = coords->find(v);
      if (it == coords->end()) inconsistent("missing coordinates for vertex '" + v + "'");
      pts->push_back(it->second);
    }
  }
  return CombPolytope(dim, vertices, std::move(fnames), std::move(fverts), std::move(pts));
}

void CombPolytope::derive_edges() {
  const int nv = num_vertices();
  vertex_edges_.assign(nv, {});
  edges_.clear();
  for (int u = 0; u < nv; ++u)
    for (int v = u + 1; v < nv; ++v) {
      auto shared = intersect_sorted(vertex_facets_[u], vertex_facets_[v]);
      if (static_cast<int>(shared.size()) >= dim_ - 1) {
        vertex_edges_[u].push_back(static_cast<int>(edges_.size()));
        vertex_edges_[v].push_back(static_cast<int>(edges_.size()));
        edges_.push_back({u, v, std::move(shared)});
      }
    }
  for (int v = 0; v < nv; ++v)
    if (static_cast<int>(vertex_edges_[v].size()) < dim_)
      inconsistent("vertex '" + vertex_names_[v] + "' has fewer than " + std::to_string(dim_) + " derived edges");
  if (dim_ == 3 && nv - static_cast<int>(edges_.size()) + num_facets() != 2)
    inconsistent("Euler relation V - E + F = 2 fails");

  std::vector<char> seen(nv, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int e : vertex_edges_[u]) {
      int w = edges_[e].u == u ? edges_[e].v : edges_[e].u;
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != nv) inconsistent("edge graph is disconnected");
}

void CombPolytope::validate_coords() {
  const auto& pts = *coords_;
  if (static_cast<int>(pts.size()) != num_vertices()) inconsistent("coordinate count differs from vertex count");
  for (const auto& p : pts)
    if (static_cast<int>(p.size()) != dim_) inconsistent("coordinate of wrong dimension");
  hyperplanes_.clear();
  for (int f = 0; f < num_facets(); ++f) {
    const auto& fv = facet_vertices_[f];
    std::vector<Point> diffs;
    for (std::size_t i = 1; i < fv.size(); ++i) {
      Point d(dim_);
      for (int k = 0; k < dim_; ++k) d[k] = pts[fv[i]][k] - pts[fv[0]][k];
      diffs.push_back(std::move(d));
    }
    auto ns = nullspace(diffs, dim_);
    if (ns.size() != 1) inconsistent("facet '" + facet_names_[f] + "' does not span a hyperplane");
    Point a = ns[0];
    Rational b = dot(a, pts[fv[0]]);
    int side = 0;
    for (int v = 0; v < num_vertices(); ++v) {
      if (std::binary_search(fv.begin(), fv.end(), v)) continue;
      Rational s = dot(a, pts[v]) - b;
      if (s == 0) inconsistent("vertex '" + vertex_names_[v] + "' lies on the plane of facet '" + facet_names_[f] + "'");
      int sg = s > 0 ? 1 : -1;
      if (side == 0) side = sg;
      if (sg != side) inconsistent("facet '" + facet_names_[f] + "' is not a supporting plane");
    }
    if (side > 0) {
      for (auto& x : a) x = -x;
      b = -b;
    }
    hyperplanes_.push_back({std::move(a), std::move(b)});
  }
}

std::optional<int> CombPolytope::vertex_index(const std::string& name) const {
  auto it = std::find(vertex_names_.begin(), vertex_names_.end(), name);
  if (it == vertex_names_.end()) return std::nullopt;
  return static_cast<int>(it - vertex_names_.begin());
}

std::optional<int> CombPolytope::facet_index(const std::string& name) const {
  auto it = std::find(facet_names_.begin(), facet_names_.end(), name);
  if (it == facet_names_.end()) return std::nullopt;
  return static_cast<int>(it - facet_names_.begin());
}

bool CombPolytope::facet_contains(int f, int v) const {
  const auto& fv = facet_vertices_.at(f);
  return std::binary_search(fv.begin(), fv.end(), v);
}

std::optional<int> CombPolytope::edge_between(int u, int v) const {
  for (int e : vertex_edges_.at(u))
    if (edges_[e].u == v || edges_[e].v == v) return e;
  return std::nullopt;
}

Point CombPolytope::centroid() const {
  Point c(dim_, Rational(0));
  for (const auto& p : *coords_)
    for (int k = 0; k < dim_; ++k) c[k] += p[k];
  for (auto& x : c) x /= num_vertices();
  return c;
}

CombPolytope CombPolytope::without_coords() const {
  return CombPolytope(dim_, vertex_names_, facet_names_, facet_vertices_);
}

// ---------------------------------------------------------------------------

const std::vector<EdgeRec>& edges(const CombPolytope& p) { return p.edges(); }

bool is_simple(const CombPolytope& p) {
  for (int v = 0; v < p.num_vertices(); ++v)
    if (static_cast<int>(p.vertex_facets(v).size()) != p.dim()) return false;
  return true;
}

bool is_edge_simple(const CombPolytope& p) {
  return std::all_of(p.edges().begin(), p.edges().end(),
                     [&](const EdgeRec& e) { return static_cast<int>(e.facets.size()) == p.dim() - 1; });
}

CombPolytope cone(const CombPolytope& p) {
  if (!is_simple(p)) throw Error(ErrorKind::NotSimple, "cone needs a simple base");
  auto vnames = p.vertex_names();
  const int apex = static_cast<int>(vnames.size());
  vnames.push_back(unique_name(vnames, "apex"));
  auto fnames = p.facet_names();
  std::vector<std::vector<int>> fverts;
  for (int f = 0; f < p.num_facets(); ++f) {
    auto fv = p.facet_vertices(f);
    fv.push_back(apex);
    fverts.push_back(std::move(fv));
  }
  fnames.push_back(unique_name(fnames, "base"));
  std::vector<int> all(p.num_vertices());
  std::iota(all.begin(), all.end(), 0);
  fverts.push_back(all);

  std::optional<std::vector<Point>> pts;
  if (p.has_coords()) {
    pts.emplace();
    for (const auto& c : p.coords()) {
      Point q = c;
      q.push_back(0);
      pts->push_back(std::move(q));
    }
    Point top = p.centroid();
    top.push_back(1);
    pts->push_back(std::move(top));
  }
  return CombPolytope(p.dim() + 1, std::move(vnames), std::move(fnames), std::move(fverts), std::move(pts));
}

CombPolytope suspension(const CombPolytope& polygon) {
  if (polygon.dim() != 2) throw Error(ErrorKind::Unsupported, "suspension is defined for polygons");
  auto vnames = polygon.vertex_names();
  const int north = static_cast<int>(vnames.size());
  vnames.push_back(unique_name(vnames, "north"));
  const int south = north + 1;
  vnames.push_back(unique_name(vnames, "south"));
  std::vector<std::string> fnames;
  std::vector<std::vector<int>> fverts;
  for (int f = 0; f < polygon.num_facets(); ++f) {
    for (auto [tip, tag] : {std::pair{north, "^N"}, std::pair{south, "^S"}}) {
      auto fv = polygon.facet_vertices(f);
      fv.push_back(tip);
      fverts.push_back(std::move(fv));
      fnames.push_back(polygon.facet_name(f) + tag);
    }
  }
  std::optional<std::vector<Point>> pts;
  if (polygon.has_coords()) {
    pts.emplace();
    for (const auto& c : polygon.coords()) pts->push_back({c[0], c[1], Rational(0)});
    Point g = polygon.centroid();
    pts->push_back({g[0], g[1], Rational(1)});
    pts->push_back({g[0], g[1], Rational(-1)});
  }
  return CombPolytope(3, std::move(vnames), std::move(fnames), std::move(fverts), std::move(pts));
}

CombPolytope polar_incidence(const CombPolytope& p) {
  std::vector<std::vector<int>> fverts;
  for (int v = 0; v < p.num_vertices(); ++v) fverts.push_back(p.vertex_facets(v));
  std::optional<std::vector<Point>> pts;
  if (p.has_coords()) {
    const Point g = p.centroid();
    pts.emplace();
    for (int f = 0; f < p.num_facets(); ++f) {
      const auto& h = p.facet_hyperplane(f);
      Rational off = h.offset - dot(h.normal, g);
      Point y = h.normal;
      for (auto& x : y) x /= off;
      pts->push_back(std::move(y));
    }
  }
  return CombPolytope(p.dim(), p.facet_names(), p.vertex_names(), std::move(fverts), std::move(pts));
}

CombPolytope dual3(const CombPolytope& p) {
  if (p.dim() != 3) throw Error(ErrorKind::Unsupported, "dual3 needs a 3-polytope");
  return polar_incidence(p);
}

bool incidence_isomorphic(const CombPolytope& a, const CombPolytope& b) {
  if (a.dim() != b.dim() || a.num_vertices() != b.num_vertices() || a.num_facets() != b.num_facets() ||
      a.edges().size() != b.edges().size())
    return false;
  const int n = a.num_vertices();
  std::set<std::vector<int>> target;
  for (int f = 0; f < b.num_facets(); ++f) target.insert(b.facet_vertices(f));
  std::vector<int> map(n, -1);
  std::vector<char> used(n, 0);

  std::function<bool(int)> rec = [&](int v) -> bool {
    if (v == n) {
      for (int f = 0; f < a.num_facets(); ++f) {
        std::vector<int> img;
        for (int x : a.facet_vertices(f)) img.push_back(map[x]);
        std::sort(img.begin(), img.end());
        if (!target.count(img)) return false;
      }
      return true;
    }
    for (int w = 0; w < n; ++w) {
      if (used[w] || a.vertex_facets(v).size() != b.vertex_facets(w).size() ||
          a.vertex_edges(v).size() != b.vertex_edges(w).size())
        continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u)
        ok = a.edge_between(u, v).has_value() == b.edge_between(map[u], w).has_value();
      if (!ok) continue;
      map[v] = w;
      used[w] = 1;
      if (rec(v + 1)) return true;
      used[w] = 0;
    }
    map[v] = -1;
    return false;
  };
  return rec(0);
}

// ---------------------------------------------------------------------------

std::vector<long long> f_vector(const CombPolytope& p) {
  if (!is_simple(p)) throw Error(ErrorKind::NotSimple, "f-vector by facet subsets needs a simple polytope");
  const int n = p.dim();
  // In a simple polytope every nonempty intersection of k facets is a face of
  // codimension k, and distinct facet sets give distinct faces.
  std::vector<std::set<std::vector<int>>> faces(n + 1);
  for (int v = 0; v < p.num_vertices(); ++v) {
    const auto& fs = p.vertex_facets(v);
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      std::vector<int> sub;
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) sub.push_back(fs[i]);
      faces[sub.size()].insert(std::move(sub));
    }
  }
  std::vector<long long> f(n);
  for (int k = 1; k <= n; ++k) f[n - k] = static_cast<long long>(faces[k].size());
  return f;
}

std::vector<long long> h_vector(const CombPolytope& p) {
  const int n = p.dim();
  const auto f = f_vector(p);
  auto fm = [&](int i) -> long long { return i == 0 ? 1 : f[n - i]; };  // faces of codimension i
  auto binom = [](int a, int b) -> long long {
    if (b < 0 || b > a) return 0;
    long long r = 1;
    for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
  };
  // sum_i h_i t^{n-i} = sum_i c_i (t-1)^{n-i}, c_i = number of codimension-i faces
  std::vector<long long> h(n + 1, 0);
  for (int i = 0; i <= n; ++i)
    for (int pw = 0; pw <= n - i; ++pw) {
      long long term = fm(i) * binom(n - i, pw) * (((n - i - pw) % 2) ? -1 : 1);
      h[n - pw] += term;
    }
  return h;
}

// ---------------------------------------------------------------------------

Section TruncatedPolytope::section(int v) const {
  std::vector<int> q_vertex, base_facet;
  std::vector<std::string> vnames;
  for (int qv = 0; qv < q.num_vertices(); ++qv)
    if (corner_of[qv] == v) {
      q_vertex.push_back(qv);
      vnames.push_back(q.vertex_name(qv));
    }
  std::vector<std::string> fnames;
  std::vector<std::vector<int>> fverts;
  for (int f : base.vertex_facets(v)) {
    std::vector<int> fv;
    for (std::size_t i = 0; i < q_vertex.size(); ++i) {
      const auto& e = base.edges()[pedge_of[q_vertex[i]]];
      if (std::binary_search(e.facets.begin(), e.facets.end(), f)) fv.push_back(static_cast<int>(i));
    }
    base_facet.push_back(f);
    fnames.push_back(base.facet_name(f));
    fverts.push_back(std::move(fv));
  }
  std::optional<std::vector<Point>> pts;
  if (q.has_coords()) {
    const auto& normal = q.facet_hyperplane(new_facets[v]).normal;
    const int drop = static_cast<int>(std::find_if(normal.begin(), normal.end(), [](const Rational& x) { return x != 0; }) -
                                      normal.begin());
    pts.emplace();
    for (int qv : q_vertex) {
      Point p;
      for (int k = 0; k < q.dim(); ++k)
        if (k != drop) p.push_back(q.coord(qv)[k]);
      pts->push_back(std::move(p));
    }
  }
  return Section{CombPolytope(base.dim() - 1, std::move(vnames), std::move(fnames), std::move(fverts), std::move(pts)),
                 std::move(base_facet), std::move(q_vertex)};
}

TruncatedPolytope truncate_all_vertices(const CombPolytope& p) {
  if (p.dim() < 3) throw Error(ErrorKind::Unsupported, "truncation needs dimension >= 3");
  if (!is_edge_simple(p)) throw Error(ErrorKind::NotEdgeSimple, "every edge must lie in exactly n-1 facets");

  const auto& es = p.edges();
  std::vector<std::string> vnames;
  std::vector<int> pedge, corner;
  std::vector<std::vector<int>> qv_of(p.num_vertices());  // base vertex -> its q vertices
  for (int v = 0; v < p.num_vertices(); ++v)
    for (int e : p.vertex_edges(v)) {
      int w = es[e].u == v ? es[e].v : es[e].u;
      qv_of[v].push_back(static_cast<int>(vnames.size()));
      vnames.push_back(p.vertex_name(v) + "~" + p.vertex_name(w));
      pedge.push_back(e);
      corner.push_back(v);
    }

  std::vector<std::string> fnames;
  std::vector<std::vector<int>> fverts;
  std::vector<int> old_facets, new_facets;
  for (int f = 0; f < p.num_facets(); ++f) {
    std::vector<int> fv;
    for (int qv = 0; qv < static_cast<int>(vnames.size()); ++qv) {
      const auto& fs = es[pedge[qv]].facets;
      if (std::binary_search(fs.begin(), fs.end(), f)) fv.push_back(qv);
    }
    old_facets.push_back(static_cast<int>(fnames.size()));
    fnames.push_back(p.facet_name(f));
    fverts.push_back(std::move(fv));
  }
  for (int v = 0; v < p.num_vertices(); ++v) {
    new_facets.push_back(static_cast<int>(fnames.size()));
    fnames.push_back(unique_name(p.facet_names(), "H:" + p.vertex_name(v)));
    fverts.push_back(qv_of[v]);
  }

  std::optional<std::vector<Point>> pts;
  if (p.has_coords()) {
    pts.emplace(vnames.size());
    for (int v = 0; v < p.num_vertices(); ++v) {
      // Cut by a plane orthogonal to the sum of the facet normals at v, at
      // most a third of the way along any edge.
      Point c(p.dim(), Rational(0));
      for (int f : p.vertex_facets(v))
        for (int k = 0; k < p.dim(); ++k) c[k] += p.facet_hyperplane(f).normal[k];
      const Rational cv = dot(c, p.coord(v));
      std::optional<Rational> gap;
      for (int u = 0; u < p.num_vertices(); ++u) {
        if (u == v) continue;
        Rational d = cv - dot(c, p.coord(u));
        if (d <= 0) inconsistent("vertex normal does not isolate vertex '" + p.vertex_name(v) + "'");
        if (!gap || d < *gap) gap = d;
      }
      const Rational depth = *gap / 3;
      for (int qv : qv_of[v]) {
        const auto& e = es[pedge[qv]];
        int w = e.u == v ? e.v : e.u;
        Rational s = depth / (cv - dot(c, p.coord(w)));
        Point x(p.dim());
        for (int k = 0; k < p.dim(); ++k) x[k] = p.coord(v)[k] + s * (p.coord(w)[k] - p.coord(v)[k]);
        (*pts)[qv] = std::move(x);
      }
    }
  }

  CombPolytope q(p.dim(), std::move(vnames), std::move(fnames), std::move(fverts), std::move(pts));
  if (!is_simple(q)) inconsistent("truncation is not simple");
  return TruncatedPolytope{p, std::move(q), std::move(new_facets), std::move(old_facets), std::move(pedge),
                           std::move(corner)};
}

// ---------------------------------------------------------------------------

std::vector<std::size_t> IndexData::cell_counts() const {
  std::vector<std::size_t> out;
  for (const auto& c : cells) out.push_back(c.size());
  return out;
}

IndexData index_data(const TruncatedPolytope& t, const Point& functional) {
  const auto& q = t.q;
  if (!q.has_coords()) throw Error(ErrorKind::Unsupported, "index data needs coordinates");
  if (static_cast<int>(functional.size()) != q.dim()) throw Error(ErrorKind::DimensionMismatch, "functional dimension");
  IndexData out;
  out.functional = functional;
  for (int v = 0; v < q.num_vertices(); ++v) out.value.push_back(dot(functional, q.coord(v)));
  {
    std::set<Rational> distinct(out.value.begin(), out.value.end());
    if (static_cast<int>(distinct.size()) != q.num_vertices())
      throw Error(ErrorKind::DegenerateFunctional, "functional does not separate the vertices");
  }
  out.ind.assign(q.num_vertices(), 0);
  for (const auto& e : q.edges()) ++out.ind[out.value[e.u] > out.value[e.v] ? e.u : e.v];
  out.cells.assign(q.dim() + 1, {});
  for (int ei = 0; ei < static_cast<int>(q.edges().size()); ++ei) {
    const auto& e = q.edges()[ei];
    if (t.pedge_of[e.u] != t.pedge_of[e.v]) continue;
    int top = out.value[e.u] > out.value[e.v] ? e.u : e.v;
    out.cells[out.ind[top]].push_back({top, ei});
  }
  return out;
}

IndexData index_data(const TruncatedPolytope& t, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long long> dist(-1000000, 1000000);
  for (int attempt = 0; attempt < 64; ++attempt) {
    Point phi;
    for (int k = 0; k < t.q.dim(); ++k) phi.push_back(Rational(dist(rng)));
    try {
      return index_data(t, phi);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::DegenerateFunctional) throw;
    }
  }
  throw Error(ErrorKind::DegenerateFunctional, "no generic functional found after 64 draws");
}

}  // namespace qtoric
