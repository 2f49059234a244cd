#include "qtoric/charmap.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace qtoric {

namespace {

std::string facet_list(const CombPolytope& p, const std::vector<int>& fs) {
  std::string s = "{";
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (i) s += ",";
    s += p.facet_name(fs[i]);
  }
  return s + "}";
}

std::string edge_name(const CombPolytope& p, const EdgeRec& e) {
  return p.vertex_name(e.u) + "-" + p.vertex_name(e.v);
}

void check_labels(const CombPolytope& p, std::size_t n, std::size_t d) {
  if (n != static_cast<std::size_t>(p.num_facets()))
    throw Error(ErrorKind::DimensionMismatch, "one label per facet required");
  (void)d;
}

// Facets in breadth-first order over the facet adjacency graph.
std::vector<int> facet_order(const CombPolytope& p) {
  std::vector<std::set<int>> adj(p.num_facets());
  for (const auto& e : p.edges())
    for (int a : e.facets)
      for (int b : e.facets)
        if (a != b) adj[a].insert(b);
  std::vector<int> order;
  std::vector<char> seen(p.num_facets(), 0);
  for (int s = 0; s < p.num_facets(); ++s) {
    if (seen[s]) continue;
    seen[s] = 1;
    order.push_back(s);
    for (std::size_t head = order.size() - 1; head < order.size(); ++head)
      for (int g : adj[order[head]])
        if (!seen[g]) {
          seen[g] = 1;
          order.push_back(g);
        }
  }
  return order;
}

// For each position in `order`, the edges whose facets are all assigned once
// that position is filled.
std::vector<std::vector<int>> edges_closed_at(const CombPolytope& p, const std::vector<int>& order) {
  std::vector<int> pos(p.num_facets());
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> out(order.size());
  for (int e = 0; e < static_cast<int>(p.edges().size()); ++e) {
    int last = 0;
    for (int f : p.edges()[e].facets) last = std::max(last, pos[f]);
    out[last].push_back(e);
  }
  return out;
}

}  // namespace

CharacteristicMap::CharacteristicMap(CombPolytope p, std::vector<SignVec> a) : polytope(std::move(p)), assign(std::move(a)) {
  check_labels(polytope, assign.size(), polytope.dim());
  for (const auto& v : assign)
    if (static_cast<int>(v.dim()) != polytope.dim())
      throw Error(ErrorKind::DimensionMismatch, "characteristic labels live in Z^n");
}

IsotropyMap::IsotropyMap(CombPolytope p, std::vector<SignVec> a) : polytope(std::move(p)), assign(std::move(a)) {
  check_labels(polytope, assign.size(), polytope.dim() - 1);
  for (const auto& v : assign)
    if (static_cast<int>(v.dim()) != polytope.dim() - 1)
      throw Error(ErrorKind::DimensionMismatch, "isotropy labels live in Z^{n-1}");
}

Mod2Map::Mod2Map(CombPolytope p, std::vector<std::uint64_t> a, int r)
    : polytope(std::move(p)), assign(std::move(a)), rank(r < 0 ? polytope.dim() - 1 : r) {
  check_labels(polytope, assign.size(), rank);
  if (rank != polytope.dim() && rank != polytope.dim() - 1)
    throw Error(ErrorKind::DimensionMismatch, "F2 rank must be n or n-1");
  for (auto v : assign)
    if (rank < 64 && (v >> rank) != 0) throw Error(ErrorKind::DimensionMismatch, "F2 label exceeds the rank");
}

ValidationReport validate_characteristic(const CharacteristicMap& c) {
  ValidationReport r;
  const auto& p = c.polytope;
  if (!is_simple(p)) r.notes.push_back("polytope is not simple");
  std::set<std::vector<int>> faces;
  for (int v = 0; v < p.num_vertices(); ++v) {
    const auto& fs = p.vertex_facets(v);
    if (fs.size() >= 63) {
      r.fail("vertex " + p.vertex_name(v) + " lies in too many facets");
      continue;
    }
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << fs.size()); ++mask) {
      std::vector<int> sub;
      for (std::size_t i = 0; i < fs.size(); ++i)
        if (mask & (std::uint64_t{1} << i)) sub.push_back(fs[i]);
      faces.insert(std::move(sub));
    }
  }
  for (const auto& sub : faces) {
    std::vector<SignVec> vs;
    for (int f : sub) vs.push_back(c.assign[f]);
    if (!is_direct_summand(vs, p.dim())) r.fail("face " + facet_list(p, sub) + " fails the direct-summand condition");
  }
  return r;
}

ValidationReport validate_isotropy(const IsotropyMap& m) {
  ValidationReport r;
  const auto& p = m.polytope;
  const std::size_t d = p.dim() - 1;
  for (const auto& e : p.edges()) {
    if (e.facets.size() != d) {
      r.fail("edge " + edge_name(p, e) + " lies in " + std::to_string(e.facets.size()) + " facets");
      continue;
    }
    std::vector<SignVec> vs;
    for (int f : e.facets) vs.push_back(m.assign[f]);
    if (!is_basis(vs, d)) r.fail("edge " + edge_name(p, e) + " labels " + facet_list(p, e.facets) + " are not a basis");
  }
  return r;
}

int f2_rank(std::vector<std::uint64_t> vs) {
  int rank = 0;
  for (int bit = 63; bit >= 0; --bit) {
    auto it = std::find_if(vs.begin(), vs.end(), [&](std::uint64_t x) { return (x >> bit) & 1; });
    if (it == vs.end()) continue;
    std::uint64_t piv = *it;
    vs.erase(it);
    for (auto& x : vs)
      if ((x >> bit) & 1) x ^= piv;
    ++rank;
  }
  return rank;
}

ValidationReport validate_mod2(const Mod2Map& m) {
  ValidationReport r;
  const auto& p = m.polytope;
  if (m.rank == p.dim()) {
    for (int v = 0; v < p.num_vertices(); ++v) {
      std::vector<std::uint64_t> vs;
      for (int f : p.vertex_facets(v)) vs.push_back(m.assign[f]);
      if (static_cast<int>(vs.size()) != m.rank || f2_rank(vs) != m.rank)
        r.fail("vertex " + p.vertex_name(v) + " F2 labels are not a basis");
    }
    return r;
  }
  for (const auto& e : p.edges()) {
    if (static_cast<int>(e.facets.size()) != m.rank) {
      r.fail("edge " + edge_name(p, e) + " lies in " + std::to_string(e.facets.size()) + " facets");
      continue;
    }
    std::vector<std::uint64_t> vs;
    for (int f : e.facets) vs.push_back(m.assign[f]);
    if (f2_rank(vs) != m.rank) r.fail("edge " + edge_name(p, e) + " F2 labels are not a basis");
  }
  return r;
}

Mod2Map reduce_mod2(const IsotropyMap& m) {
  std::vector<std::uint64_t> out;
  for (const auto& v : m.assign) {
    std::uint64_t bits = 0;
    for (std::size_t k = 0; k < v.dim(); ++k)
      if (boost::multiprecision::abs(v[k]) % 2 == 1) bits |= std::uint64_t{1} << k;
    out.push_back(bits);
  }
  return Mod2Map(m.polytope, std::move(out));
}

CharacteristicMap restrict_to_section(const TruncatedPolytope& t, const IsotropyMap& m, int base_vertex) {
  if (auto rep = validate_isotropy(m); !rep.valid) throw Error(ErrorKind::InvalidMap, rep.violations.front());
  Section s = t.section(base_vertex);
  std::vector<SignVec> labels;
  for (int f : s.base_facet) labels.push_back(m.assign[f]);
  return CharacteristicMap(std::move(s.polytope), std::move(labels));
}

CharacteristicMap extend_to_characteristic(const TruncatedPolytope& t, const IsotropyMap& m) {
  if (auto rep = validate_isotropy(m); !rep.valid) throw Error(ErrorKind::InvalidMap, rep.violations.front());
  const int n = t.q.dim();
  std::vector<std::optional<SignVec>> labels(t.q.num_facets());
  for (int f = 0; f < t.base.num_facets(); ++f) {
    IntVec v = m.assign[f].rep();
    v.push_back(0);
    labels[t.old_facets[f]] = SignVec(std::move(v));
  }
  IntVec up(n, 0);
  up[n - 1] = 1;
  for (int f : t.new_facets) labels[f] = SignVec(up);
  std::vector<SignVec> out;
  for (auto& l : labels) out.push_back(std::move(*l));
  return CharacteristicMap(t.q, std::move(out));
}

std::optional<Mod2Map> search_mod2(const CombPolytope& p) {
  const int rank = p.dim() - 1;
  if (rank <= 0 || rank > 20) throw Error(ErrorKind::Unsupported, "F2 search rank out of range");
  const auto order = facet_order(p);
  const auto closed = edges_closed_at(p, order);
  std::vector<std::uint64_t> assign(p.num_facets(), 0);
  const std::uint64_t limit = std::uint64_t{1} << rank;

  std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
    if (i == order.size()) return true;
    for (std::uint64_t x = 1; x < limit; ++x) {
      assign[order[i]] = x;
      bool ok = true;
      for (int e : closed[i]) {
        const auto& fs = p.edges()[e].facets;
        if (static_cast<int>(fs.size()) != rank) {
          ok = false;
          break;
        }
        std::vector<std::uint64_t> vs;
        for (int f : fs) vs.push_back(assign[f]);
        if (f2_rank(vs) != rank) {
          ok = false;
          break;
        }
      }
      if (ok && rec(i + 1)) return true;
    }
    assign[order[i]] = 0;
    return false;
  };
  if (!rec(0)) return std::nullopt;
  return Mod2Map(p, assign);
}

IsotropySearch search_isotropy(const CombPolytope& p, int bound) {
  IsotropySearch out;
  out.bound = bound;
  if (!search_mod2(p)) {
    out.mod2_obstruction = true;
    out.certificate = "mod-2 obstruction";
    return out;
  }
  const std::size_t rank = p.dim() - 1;

  // Primitive normalized label candidates with entries in [-bound, bound].
  std::vector<SignVec> candidates;
  {
    std::vector<long long> cur(rank, -bound);
    while (true) {
      IntVec v(cur.begin(), cur.end());
      bool nonzero = std::any_of(cur.begin(), cur.end(), [](long long x) { return x != 0; });
      if (nonzero && normalize_sign(v) == v) {
        SignVec s(v);
        if (s.primitive()) candidates.push_back(std::move(s));
      }
      std::size_t k = 0;
      while (k < rank && cur[k] == bound) cur[k++] = -bound;
      if (k == rank) break;
      ++cur[k];
    }
  }
  std::sort(candidates.begin(), candidates.end(), [](const SignVec& a, const SignVec& b) {
    Int la = 0, lb = 0;
    for (const auto& x : a.rep()) la += abs(x);
    for (const auto& x : b.rep()) lb += abs(x);
    return la != lb ? la < lb : a < b;
  });

  const auto order = facet_order(p);
  const auto closed = edges_closed_at(p, order);
  std::vector<const SignVec*> assign(p.num_facets(), nullptr);
  std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
    if (i == order.size()) return true;
    for (const auto& c : candidates) {
      assign[order[i]] = &c;
      bool ok = true;
      for (int e : closed[i]) {
        std::vector<SignVec> vs;
        for (int f : p.edges()[e].facets) vs.push_back(*assign[f]);
        if (!is_basis(vs, rank)) {
          ok = false;
          break;
        }
      }
      if (ok && rec(i + 1)) return true;
    }
    assign[order[i]] = nullptr;
    return false;
  };
  if (rec(0)) {
    std::vector<SignVec> labels;
    for (auto* s : assign) labels.push_back(*s);
    out.map.emplace(p, std::move(labels));
    out.certificate = "found";
  } else {
    out.certificate = "none within bound " + std::to_string(bound);
  }
  return out;
}

}  // namespace qtoric
