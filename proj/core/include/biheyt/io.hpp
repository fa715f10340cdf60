#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "biheyt/algebra.hpp"
#include "biheyt/free_algebra.hpp"
#include "biheyt/morphisms.hpp"
#include "biheyt/poset.hpp"
#include "biheyt/term.hpp"

namespace biheyt {

using Json = nlohmann::json;

// {"size": n, "leq": [[bool, ...], ...]}, plus "labels" when present.
Json poset_to_json(const Poset& p);
// Throws Error(Parse) on malformed input; the relation is not validated.
Poset poset_from_json(const Json& j);

// {"size": n, "leq": [[...]], "bot": i, "top": j}, plus optional "labels".
// Operation tables are never serialized; loading rebuilds them from the
// order via from_lattice_order.
Json algebra_to_json(const BiHeytingAlgebra& a);
BiHeytingAlgebra algebra_from_json(const Json& j);

// Algebra JSON plus "generators": [indices].
Json free_algebra_to_json(const FreeAlgebra& f);

// Terms mirror the AST: {"var": k}, {"const": 0|1}, {"op": "&"|"|"|"->"|"-<",
// "args": [t, t]}, {"op": "!"|"~", "args": [t]}. Rules:
// {"premises": [{"left": t, "right": t}], "conclusion": {...}, "arity": k}.
Json term_to_json(const Term& t);
Term term_from_json(const Json& j);
Json rule_to_json(const Rule& r);
Rule rule_from_json(const Json& j);

// Rule text in the ASCII grammar, or the JSON form when it starts with '{'.
Rule rule_from_text(const std::string& text);

Json congruence_to_json(const Congruence& c);

// Hasse diagram (covering pairs), bottom-to-top.
std::string hasse_dot(const Poset& p, const std::string& name = "hasse");

}  // namespace biheyt
