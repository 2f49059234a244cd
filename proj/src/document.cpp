#include "qtoric/document.hpp"

#include <limits>

#include "qtoric/builtins.hpp"

namespace qtoric {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::Parse, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::string text(const Json& j, const char* what) {
  if (!j.is_string()) bad(std::string(what) + " must be a string");
  return j.get<std::string>();
}

SignVec json_signvec(const Json& j, std::size_t dim) {
  if (!j.is_array() || j.size() != dim) bad("label must be an array of " + std::to_string(dim) + " integers");
  IntVec v;
  for (const auto& x : j) v.push_back(json_int(x));
  if (std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; })) bad("label must be nonzero");
  return SignVec(std::move(v));
}

// Facet labels keyed by facet name, in the polytope's facet order.
template <class T, class F>
std::vector<T> facet_labels(const CombPolytope& p, const Json& assign, F&& parse) {
  if (!assign.is_object()) bad("\"assign\" must be an object keyed by facet");
  if (assign.size() != static_cast<std::size_t>(p.num_facets())) bad("\"assign\" must label every facet exactly once");
  std::vector<T> out;
  for (const auto& name : p.facet_names()) {
    if (!assign.contains(name)) bad("facet \"" + name + "\" has no label");
    out.push_back(parse(assign.at(name)));
  }
  return out;
}

Json facet_assign(const CombPolytope& p, const std::vector<Json>& labels) {
  Json out = Json::object();
  for (int f = 0; f < p.num_facets(); ++f) out[p.facet_name(f)] = labels[f];
  return out;
}

}  // namespace

Json int_json(const Int& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
    return static_cast<long long>(x);
  return x.str();
}

Int json_int(const Json& j) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? Int(j.get<unsigned long long>()) : Int(j.get<long long>());
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    const std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos) bad("not an integer: " + s);
    return Int(s[0] == '+' ? s.substr(1) : s);
  }
  bad("expected an integer");
}

Json rational_json(const Rational& x) {
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

Rational json_rational(const Json& j) {
  if (j.is_number_integer()) return Rational(json_int(j));
  if (!j.is_string()) bad("expected a rational string");
  const auto s = j.get<std::string>();
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(json_int(s));
  const Int den = json_int(s.substr(slash + 1));
  if (den == 0) bad("zero denominator in " + s);
  return Rational(json_int(s.substr(0, slash)), den);
}

CombPolytope parse_polytope(const Json& j) {
  if (j.is_string()) {
    auto p = builtin::by_name(j.get<std::string>());
    if (!p) bad("unknown builtin polytope \"" + j.get<std::string>() + "\"");
    return *p;
  }
  if (!j.is_object()) bad("polytope must be an object or a builtin name");
  if (j.contains("kind") && j.at("kind") != "polytope") bad("expected kind \"polytope\"");
  const auto& d = field(j, "dim");
  if (!d.is_number_integer() || d.get<long long>() < 1 || d.get<long long>() > 16) bad("\"dim\" must be an integer in 1..16");
  std::vector<std::string> vertices;
  const auto& vs = field(j, "vertices");
  if (!vs.is_array()) bad("\"vertices\" must be an array");
  for (const auto& v : vs) vertices.push_back(text(v, "vertex id"));
  const auto& fs = field(j, "facets");
  if (!fs.is_object()) bad("\"facets\" must be an object");
  std::vector<std::pair<std::string, std::vector<std::string>>> facets;
  for (const auto& [name, members] : fs.items()) {
    if (!members.is_array()) bad("facet \"" + name + "\" must list vertex ids");
    std::vector<std::string> ids;
    for (const auto& v : members) ids.push_back(text(v, "vertex id"));
    facets.emplace_back(name, std::move(ids));
  }
  std::optional<std::map<std::string, Point>> coords;
  if (j.contains("coords")) {
    const auto& cs = j.at("coords");
    if (!cs.is_object()) bad("\"coords\" must be an object");
    coords.emplace();
    for (const auto& [name, pt] : cs.items()) {
      if (!pt.is_array()) bad("coordinates of \"" + name + "\" must be an array");
      Point p;
      for (const auto& x : pt) p.push_back(json_rational(x));
      (*coords)[name] = std::move(p);
    }
  }
  return CombPolytope::from_names(static_cast<int>(d.get<long long>()), vertices, facets, coords);
}

Document parse_document(const Json& j) {
  const std::string kind = text(field(j, "kind"), "\"kind\"");
  if (kind == "polytope") return {kind, parse_polytope(j)};
  if (kind == "polygon4") {
    const auto& vs = field(j, "vecs");
    if (!vs.is_array()) bad("\"vecs\" must be an array");
    std::vector<SignVec> vecs;
    for (const auto& v : vs) vecs.push_back(json_signvec(v, 2));
    if (vecs.size() < 3) bad("a polygon needs at least 3 labels");
    return {kind, Polygon4(std::move(vecs))};
  }
  if (kind == "isotropy" || kind == "characteristic") {
    CombPolytope p = parse_polytope(field(j, "polytope"));
    const std::size_t dim = kind == "isotropy" ? p.dim() - 1 : p.dim();
    if (dim == 0) bad("polytope dimension too small");
    auto labels = facet_labels<SignVec>(p, field(j, "assign"), [&](const Json& x) { return json_signvec(x, dim); });
    if (kind == "isotropy") return {kind, IsotropyMap(std::move(p), std::move(labels))};
    return {kind, CharacteristicMap(std::move(p), std::move(labels))};
  }
  if (kind == "mod2") {
    CombPolytope p = parse_polytope(field(j, "polytope"));
    int rank = p.dim() - 1;
    if (j.contains("rank")) {
      if (!j.at("rank").is_number_integer()) bad("\"rank\" must be an integer");
      rank = j.at("rank").get<int>();
    }
    if (rank < 1 || rank > 63 || (rank != p.dim() && rank != p.dim() - 1)) bad("\"rank\" must be n or n-1");
    auto labels = facet_labels<std::uint64_t>(p, field(j, "assign"), [&](const Json& x) {
      if (!x.is_array() || x.size() != static_cast<std::size_t>(rank)) bad("F2 label must have " + std::to_string(rank) + " bits");
      std::uint64_t bits = 0;
      for (std::size_t k = 0; k < x.size(); ++k) {
        const Int b = json_int(x[k]);
        if (b != 0 && b != 1) bad("F2 entries are 0 or 1");
        if (b == 1) bits |= std::uint64_t{1} << k;
      }
      return bits;
    });
    return {kind, Mod2Map(std::move(p), std::move(labels), rank)};
  }
  bad("unknown kind \"" + kind + "\"");
}

Document parse_document_text(const std::string& s) {
  Json j;
  try {
    j = Json::parse(s);
  } catch (const Json::parse_error& e) {
    bad(e.what());
  }
  try {
    return parse_document(j);
  } catch (const Json::exception& e) {
    bad(e.what());
  }
}

Json to_json(const SignVec& v) {
  Json out = Json::array();
  for (const auto& x : v.rep()) out.push_back(int_json(x));
  return out;
}

Json to_json(const CombPolytope& p) {
  Json out{{"kind", "polytope"}, {"dim", p.dim()}, {"vertices", p.vertex_names()}};
  Json facets = Json::object();
  for (int f = 0; f < p.num_facets(); ++f) {
    Json ids = Json::array();
    for (int v : p.facet_vertices(f)) ids.push_back(p.vertex_name(v));
    facets[p.facet_name(f)] = ids;
  }
  out["facets"] = facets;
  if (p.has_coords()) {
    Json cs = Json::object();
    for (int v = 0; v < p.num_vertices(); ++v) {
      Json pt = Json::array();
      for (const auto& x : p.coord(v)) pt.push_back(rational_json(x));
      cs[p.vertex_name(v)] = pt;
    }
    out["coords"] = cs;
  }
  return out;
}

Json to_json(const IsotropyMap& m) {
  std::vector<Json> labels;
  for (const auto& v : m.assign) labels.push_back(to_json(v));
  return {{"kind", "isotropy"}, {"polytope", to_json(m.polytope)}, {"assign", facet_assign(m.polytope, labels)}};
}

Json to_json(const CharacteristicMap& m) {
  std::vector<Json> labels;
  for (const auto& v : m.assign) labels.push_back(to_json(v));
  return {{"kind", "characteristic"}, {"polytope", to_json(m.polytope)}, {"assign", facet_assign(m.polytope, labels)}};
}

Json to_json(const Mod2Map& m) {
  std::vector<Json> labels;
  for (auto bits : m.assign) {
    Json l = Json::array();
    for (int k = 0; k < m.rank; ++k) l.push_back((bits >> k) & 1);
    labels.push_back(l);
  }
  return {{"kind", "mod2"}, {"polytope", to_json(m.polytope)}, {"rank", m.rank}, {"assign", facet_assign(m.polytope, labels)}};
}

Json to_json(const Polygon4& p) {
  Json vs = Json::array();
  for (const auto& v : p.vecs()) vs.push_back(to_json(v));
  return {{"kind", "polygon4"}, {"vecs", vs}};
}

Json to_json(const Document& d) {
  return std::visit([](const auto& x) { return to_json(x); }, d.payload);
}

Json to_json(const TriangleClass& c) {
  Json r0 = Json::array(), r1 = Json::array();
  for (const auto& x : c.row0) r0.push_back(int_json(x));
  for (const auto& x : c.row1) r1.push_back(int_json(x));
  return Json::array({r0, r1});
}

Json to_json(const CobClass& c) {
  Json terms = Json::array();
  for (const auto& [cls, k] : c.terms()) terms.push_back({{"class", to_json(cls)}, {"coefficient", int_json(k)}});
  return terms;
}

Json to_json(const DecompTrace& t) {
  Json steps = Json::array();
  for (const auto& s : t.steps) {
    if (s.kind == DecompStep::Kind::HirzebruchSplit) {
      steps.push_back({{"kind", "hirzebruch_split"},
                       {"removed", s.removed},
                       {"square", to_json(*s.square)["vecs"]},
                       {"k", int_json(*is_hirzebruch(*s.square))}});
      continue;
    }
    Json summand = Json::array();
    for (const auto& v : s.summand->cyclic()) summand.push_back(to_json(v));
    steps.push_back({{"kind", "blow_down"},
                     {"removed", s.removed},
                     {"summand", summand},
                     {"class", to_json(s.cls->cls)},
                     {"sign", s.cls->sign}});
  }
  Json out{{"input", to_json(t.input)["vecs"]}, {"steps", steps}, {"terminal_polygon", to_json(t.terminal_polygon)["vecs"]}};
  switch (t.terminal) {
    case Terminal::Triangle:
      out["terminal"] = "triangle";
      out["terminal_class"] = {{"class", to_json(t.terminal_class->cls)}, {"sign", t.terminal_class->sign}};
      break;
    case Terminal::Hirzebruch:
      out["terminal"] = "hirzebruch";
      out["k"] = int_json(*t.hirzebruch_k);
      break;
    case Terminal::Product:
      out["terminal"] = "product";
      out["k"] = 0;
      break;
  }
  return out;
}

Json to_json(const PieceID& id) {
  Json out{{"kind", to_string(id.kind)}, {"m", id.m}};
  if (id.triangle) {
    out["class"] = to_json(id.triangle->cls);
    out["sign"] = id.triangle->sign;
  }
  if (id.kind == PieceID::Kind::Hirzebruch || id.kind == PieceID::Kind::ProductOfSpheres) out["k"] = int_json(id.k);
  if (id.cls) out["cobordism_class"] = to_json(*id.cls);
  return out;
}

Json to_json(const ValidationReport& r) {
  return {{"valid", r.valid}, {"violations", r.violations}, {"notes", r.notes}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace qtoric
