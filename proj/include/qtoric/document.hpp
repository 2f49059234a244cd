#pragma once

// JSON documents: one format for every input kind, with a "kind" field.
// Keys are emitted sorted; integers outside 64 bits and all rationals are
// decimal strings.

#include <string>
#include <variant>

#include <json.hpp>

#include "qtoric/boundary.hpp"
#include "qtoric/charmap.hpp"
#include "qtoric/cobord4.hpp"
#include "qtoric/polytope.hpp"

namespace qtoric {

using Json = nlohmann::json;

using Payload = std::variant<CombPolytope, IsotropyMap, CharacteristicMap, Polygon4, Mod2Map>;

struct Document {
  std::string kind;
  Payload payload;
};

/// Throws Error(Parse) on malformed JSON or schema violations; polytope
/// consistency failures surface as Error(Inconsistent).
Document parse_document(const Json& j);
Document parse_document_text(const std::string& text);

/// A "polytope" field may be an embedded polytope document or a builtin name.
CombPolytope parse_polytope(const Json& j);

Json int_json(const Int& x);
Int json_int(const Json& j);
Json rational_json(const Rational& x);
Rational json_rational(const Json& j);

Json to_json(const SignVec& v);
Json to_json(const CombPolytope& p);
Json to_json(const IsotropyMap& m);
Json to_json(const CharacteristicMap& m);
Json to_json(const Mod2Map& m);
Json to_json(const Polygon4& p);
Json to_json(const Document& d);

Json to_json(const TriangleClass& c);
Json to_json(const CobClass& c);
Json to_json(const DecompTrace& t);
Json to_json(const PieceID& id);
Json to_json(const ValidationReport& r);

std::string dump(const Json& j);

}  // namespace qtoric
