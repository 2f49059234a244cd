// qtoric: command-line front end.
//
// Exit codes: 0 ok, 1 parse error, 2 invalid input, 3 unclassifiable,
// 4 pattern not matched.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qtoric/boundary.hpp"
#include "qtoric/builtins.hpp"
#include "qtoric/charmap.hpp"
#include "qtoric/cobord4.hpp"
#include "qtoric/document.hpp"
#include "qtoric/witness.hpp"

using namespace qtoric;

namespace {

struct Options {
  std::uint64_t seed = 1;
  std::string mode = "dihedral";
  int bound = 2;
  std::string format = "json";
};

struct Report {
  std::string status = "ok";
  Json data = Json::object();
  std::vector<std::string> notes;
  int code = 0;
};

std::string read_input(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Parse, "cannot read " + path);
    ss << in.rdbuf();
  }
  return ss.str();
}

Document load(const std::string& path) { return parse_document_text(read_input(path)); }

template <class T>
const T& expect(const Document& d, const char* kind) {
  if (const T* x = std::get_if<T>(&d.payload)) return *x;
  throw Error(ErrorKind::Parse, std::string("expected a ") + kind + " document, got " + d.kind);
}

void text_lines(const Json& j, const std::string& prefix, std::ostream& os) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) text_lines(v, prefix.empty() ? k : prefix + "." + k, os);
  } else if (j.is_array() && std::any_of(j.begin(), j.end(), [](const Json& x) { return x.is_object(); })) {
    for (std::size_t i = 0; i < j.size(); ++i) text_lines(j[i], prefix + "[" + std::to_string(i) + "]", os);
  } else {
    os << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

void emit(const Report& r, const Options& o) {
  if (o.format == "text") {
    std::cout << "status: " << r.status << "\n";
    text_lines(r.data, "", std::cout);
    for (const auto& n : r.notes) std::cout << "note: " << n << "\n";
    return;
  }
  std::cout << dump(Json{{"status", r.status}, {"data", r.data}, {"notes", r.notes}});
}

Report invalid(Report r, const ValidationReport& v) {
  r.data["validation"] = to_json(v);
  if (!v.valid) {
    r.status = "invalid";
    r.code = 2;
  }
  return r;
}

Report cmd_validate(const std::string& path, const Options& o) {
  const Document d = load(path);
  Report r;
  r.data["kind"] = d.kind;
  if (const auto* p = std::get_if<CombPolytope>(&d.payload)) {
    ValidationReport v;
    r.data["simple"] = is_simple(*p);
    r.data["edge_simple"] = is_edge_simple(*p);
    if (!is_edge_simple(*p)) v.fail("polytope is not edge-simple");
    else if (p->dim() >= 2) {
      auto s = search_isotropy(*p, o.bound);
      r.data["isotropy_search"] = s.certificate;
      if (!s.map) v.fail("no isotropy function: " + s.certificate);
      else r.data["isotropy"] = to_json(*s.map)["assign"];
    }
    return invalid(r, v);
  }
  if (const auto* m = std::get_if<IsotropyMap>(&d.payload)) {
    auto v = validate_isotropy(*m);
    if (!v.valid && is_edge_simple(m->polytope) && m->polytope.dim() >= 2 && !search_mod2(m->polytope))
      v.notes.push_back("mod-2 obstruction: this polytope carries no isotropy function");
    return invalid(r, v);
  }
  if (const auto* c = std::get_if<CharacteristicMap>(&d.payload)) return invalid(r, validate_characteristic(*c));
  if (const auto* m = std::get_if<Mod2Map>(&d.payload)) return invalid(r, validate_mod2(*m));
  return invalid(r, validate_polygon(std::get<Polygon4>(d.payload)));
}

BoundaryModel model_from(const std::string& path, const Options& o) {
  const Document d = load(path);
  const auto& m = expect<IsotropyMap>(d, "isotropy");
  BoundaryOptions opt;
  opt.seed = o.seed;
  return build_boundary_model(m.polytope, m, opt);
}

Report cmd_boundary(const std::string& path, const Options& o) {
  const auto b = model_from(path, o);
  Report r;
  Json pieces = Json::array();
  int plus = 0, minus = 0;
  std::map<std::string, int> kinds;
  for (const auto& [v, id] : signed_piece_classes(b)) {
    Json pj = to_json(id);
    pj["vertex"] = b.trunc.base.vertex_name(v);
    pj["section"] = to_json(b.oriented.count(v) ? b.oriented.at(v) : cyclic_labels(b.pieces.at(v)))["vecs"];
    pieces.push_back(pj);
    ++kinds[to_string(id.kind)];
    if (id.triangle) (id.triangle->sign > 0 ? plus : minus) += 1;
  }
  r.data["pieces"] = pieces;
  r.data["piece_kinds"] = kinds;
  r.data["triangle_signs"] = {{"+1", plus}, {"-1", minus}};
  r.data["signed_triangle_sum"] = to_json(signed_triangle_sum(signed_piece_classes(b)));
  r.notes = b.notes;
  r.notes.push_back(std::to_string(plus) + " x sign(+1), " + std::to_string(minus) + " x sign(-1)");
  return r;
}

Report cmd_homology(const std::string& path, const Options& o) {
  const auto b = model_from(path, o);
  Report r;
  Json ranks = Json::object();
  for (const auto& [d, k] : homology_relative(b).ranks) ranks[std::to_string(d)] = k;
  r.data["ranks"] = ranks;
  r.data["cells"] = b.index->cell_counts();
  r.data["base_edges"] = b.trunc.base.edges().size();
  r.data["boundary_components"] = b.pieces.size();
  r.notes = b.notes;
  return r;
}

Report cmd_euler(const std::string& path, const Options& o) {
  const auto b = model_from(path, o);
  const auto e = euler_report(b);
  Report r;
  r.data = {{"euler_characteristic", e.chi},
            {"sum_h", e.sum_h},
            {"boundary_euler_characteristic", e.sum_h},
            {"half_boundary", e.sum_h / 2},
            {"index_total", e.index_total},
            {"variant_without_top_index", e.literal},
            {"cross_check", e.cross_check}};
  r.notes = e.notes;
  return r;
}

Report cmd_cobordism(const std::string& path, const Options&) {
  const Document d = load(path);
  const auto& p = expect<Polygon4>(d, "polygon4");
  auto v = validate_polygon(p);
  if (!v.valid) return invalid(Report{}, v);
  const auto c = cobordism_class(p);
  Report r;
  r.data["class"] = to_json(c.cls);
  r.data["class_text"] = c.cls.str();
  r.data["trace"] = to_json(c.trace);
  return r;
}

Report cmd_witness(const std::string& path, const Options&) {
  const Document d = load(path);
  const auto& p = expect<Polygon4>(d, "polygon4");
  if (auto v = validate_polygon(p); !v.valid) return invalid(Report{}, v);
  const auto w = witness_polytope(p);
  const auto check = verify_witness(w, p);
  Report r;
  r.data["pattern"] = w.pattern;
  r.data["witness"] = to_json(w.iso);
  r.data["verification"] = to_json(check.report);
  r.data["triangle_signs"] = {{"+1", check.plus}, {"-1", check.minus}};
  r.data["signed_triangle_sum"] = to_json(check.triangle_sum);
  r.data["class"] = to_json(check.expected);
  if (check.matched_vertex) r.data["matched_vertex"] = w.polytope.vertex_name(*check.matched_vertex);
  if (!check.report.valid) {
    r.status = "invalid";
    r.code = 2;
  }
  return r;
}

Report cmd_search(const std::string& path, const Options& o) {
  const Document d = load(path);
  const auto& p = expect<CombPolytope>(d, "polytope");
  if (!is_edge_simple(p)) throw Error(ErrorKind::NotEdgeSimple, "every edge must lie in exactly n-1 facets");
  const auto s = search_isotropy(p, o.bound);
  Report r;
  r.data["certificate"] = s.certificate;
  r.data["mod2_obstruction"] = s.mod2_obstruction;
  r.data["bound"] = s.bound;
  if (s.map) {
    r.data["isotropy"] = to_json(*s.map);
  } else {
    r.status = "invalid";
    r.code = 2;
  }
  return r;
}

Report cmd_extend(const std::string& path, const Options&) {
  const Document d = load(path);
  const auto& m = expect<IsotropyMap>(d, "isotropy");
  const auto t = truncate_all_vertices(m.polytope);
  const auto c = extend_to_characteristic(t, m);
  Report r = invalid(Report{}, validate_characteristic(c));
  r.data["characteristic"] = to_json(c);
  r.notes.push_back("cut facets carry the last unit vector: the circle it spans acts on each boundary piece");
  return r;
}

Report cmd_compare(const std::string& a, const std::string& b, const Options& o) {
  const Document da = load(a), db = load(b);
  const auto& p = expect<Polygon4>(da, "polygon4");
  const auto& q = expect<Polygon4>(db, "polygon4");
  if (o.mode != "strict" && o.mode != "dihedral") throw Error(ErrorKind::Parse, "--mode is strict or dihedral");
  Report r;
  r.data["mode"] = o.mode;
  r.data["equal"] = equivariantly_equal(p, q, o.mode == "strict" ? EqualityMode::Strict : EqualityMode::Dihedral);
  if (auto m = delta_equivalent(p, q)) {
    r.data["delta"] = Json::array({Json::array({int_json(m->a), int_json(m->b)}), Json::array({int_json(m->c), int_json(m->d)})});
  } else {
    r.data["delta"] = nullptr;
  }
  return r;
}

Report cmd_builtin(const std::string& name) {
  Report r;
  if (name.empty()) {
    r.data["names"] = builtin::names();
    return r;
  }
  auto p = builtin::by_name(name);
  if (!p) throw Error(ErrorKind::Parse, "unknown builtin \"" + name + "\"");
  r.data = to_json(*p);
  return r;
}

int code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::Parse: return 1;
    case ErrorKind::Unclassifiable: return 3;
    case ErrorKind::PatternNotMatched: return 4;
    default: return 2;
  }
}

const char* status_for(int code) {
  switch (code) {
    case 1: return "parse_error";
    case 3: return "unclassifiable";
    case 4: return "pattern_not_matched";
    default: return "invalid";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quasitoric manifolds over polytopes: validation, boundaries, cobordism classes"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--seed", o.seed, "Seed for random linear functionals");
  app.add_option("--mode", o.mode, "Equality mode for compare")->check(CLI::IsMember({"strict", "dihedral"}));
  app.add_option("--bound", o.bound, "Entry bound for isotropy search")->check(CLI::Range(1, 8));
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));

  std::string input, other, name;
  std::function<Report()> run;
  auto with_input = [&](const char* cmd, const char* help, Report (*fn)(const std::string&, const Options&)) {
    auto* sub = app.add_subcommand(cmd, help);
    sub->add_option("input", input, "Document path, or - for stdin")->required();
    sub->fallthrough();
    sub->callback([&, fn] { run = [&, fn] { return fn(input, o); }; });
  };
  with_input("validate", "Run the validator for the document's kind", cmd_validate);
  with_input("boundary", "Boundary pieces of the manifold over the truncation", cmd_boundary);
  with_input("homology", "Relative homology ranks", cmd_homology);
  with_input("euler", "Euler characteristic with cross-check", cmd_euler);
  with_input("cobordism", "Cobordism class of a polygon", cmd_cobordism);
  with_input("witness", "Witness polytope for a square", cmd_witness);
  with_input("search", "Search for an isotropy function", cmd_search);
  with_input("extend", "Extend an isotropy function to the truncation", cmd_extend);
  auto* cmp = app.add_subcommand("compare", "Compare two polygons");
  cmp->add_option("first", input)->required();
  cmp->add_option("second", other)->required();
  cmp->fallthrough();
  cmp->callback([&] { run = [&] { return cmd_compare(input, other, o); }; });
  auto* bi = app.add_subcommand("builtin", "Print a builtin polytope, or list them");
  bi->add_option("name", name);
  bi->fallthrough();
  bi->callback([&] { run = [&] { return cmd_builtin(name); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  Report r;
  try {
    r = run();
  } catch (const Error& e) {
    r.code = code_for(e.kind());
    r.status = status_for(r.code);
    r.data = {{"error", to_string(e.kind())}};
    r.notes.push_back(e.what());
  } catch (const Json::exception& e) {
    r.code = 1;
    r.status = status_for(1);
    r.notes.push_back(e.what());
  }
  emit(r, o);
  return r.code;
}
