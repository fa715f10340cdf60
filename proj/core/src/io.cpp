#include "biheyt/io.hpp"

#include <algorithm>
#include <cctype>

#include "biheyt/error.hpp"

namespace biheyt {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorKind::Parse, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::size_t index_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
    malformed(std::string("field '") + key + "' must be a non-negative integer");
  return v.get<std::size_t>();
}

Poset order_from_json(const Json& j) {
  const std::size_t n = index_field(j, "size");
  const Json& leq = field(j, "leq");
  if (!leq.is_array() || leq.size() != n) malformed("'leq' must be a size x size array");
  std::vector<std::vector<bool>> table(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (!leq[i].is_array() || leq[i].size() != n) malformed("'leq' row " + std::to_string(i) + " has wrong length");
    for (std::size_t k = 0; k < n; ++k) {
      const Json& cell = leq[i][k];
      if (cell.is_boolean()) table[i][k] = cell.get<bool>();
      else if (cell.is_number_integer() && (cell == 0 || cell == 1)) table[i][k] = cell.get<int>() == 1;
      else malformed("'leq' entries must be booleans");
    }
  }
  Poset p(table);
  if (j.contains("labels")) {
    const Json& labels = j.at("labels");
    if (!labels.is_array() || labels.size() != n) malformed("'labels' must have one entry per element");
    p.set_labels(labels.get<std::vector<std::string>>());
  }
  return p;
}

Json order_json(const Poset& p) {
  Json leq = Json::array();
  for (Element i = 0; i < p.size(); ++i) {
    Json row = Json::array();
    for (Element k = 0; k < p.size(); ++k) row.push_back(p.leq(i, k));
    leq.push_back(std::move(row));
  }
  return leq;
}

std::string binary_symbol(Term::Kind k) {
  switch (k) {
    case Term::Kind::Meet: return "&";
    case Term::Kind::Join: return "|";
    case Term::Kind::Imp: return "->";
    case Term::Kind::Coimp: return "-<";
    case Term::Kind::Neg: return "!";
    case Term::Kind::Coneg: return "~";
    default: return "";
  }
}

Json equation_json(const Equation& e) { return {{"left", term_to_json(e.left)}, {"right", term_to_json(e.right)}}; }

Equation equation_from_json(const Json& j) {
  return {term_from_json(field(j, "left")), term_from_json(field(j, "right"))};
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

Json poset_to_json(const Poset& p) {
  Json j{{"size", p.size()}, {"leq", order_json(p)}};
  if (!p.labels().empty()) j["labels"] = p.labels();
  return j;
}

Poset poset_from_json(const Json& j) { return order_from_json(j); }

Json algebra_to_json(const BiHeytingAlgebra& a) {
  const Poset order = a.order();
  Json j{{"size", a.size()}, {"leq", order_json(order)}, {"bot", a.bot()}, {"top", a.top()}};
  if (!a.labels().empty()) j["labels"] = a.labels();
  return j;
}

BiHeytingAlgebra algebra_from_json(const Json& j) {
  Poset order = order_from_json(j);
  const std::size_t bot = index_field(j, "bot"), top = index_field(j, "top");
  if (bot >= order.size() || top >= order.size()) malformed("'bot'/'top' out of range");
  return BiHeytingAlgebra::from_lattice_order(order, static_cast<Element>(bot), static_cast<Element>(top));
}

Json free_algebra_to_json(const FreeAlgebra& f) {
  Json j = algebra_to_json(f.algebra);
  j["generators"] = f.generators;
  return j;
}

Json term_to_json(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Variable: return {{"var", t.index()}};
    case Term::Kind::Zero: return {{"const", 0}};
    case Term::Kind::One: return {{"const", 1}};
    case Term::Kind::Neg:
    case Term::Kind::Coneg: return {{"op", binary_symbol(t.kind())}, {"args", Json::array({term_to_json(t.lhs())})}};
    default:
      return {{"op", binary_symbol(t.kind())},
              {"args", Json::array({term_to_json(t.lhs()), term_to_json(t.rhs())})}};
  }
}

Term term_from_json(const Json& j) {
  if (!j.is_object()) malformed("term must be an object");
  if (j.contains("var")) {
    const std::size_t k = index_field(j, "var");
    if (k == 0) malformed("variables are numbered from 1");
    return Term::variable(static_cast<unsigned>(k));
  }
  if (j.contains("const")) {
    const std::size_t c = index_field(j, "const");
    if (c > 1) malformed("constants are 0 and 1");
    return c == 0 ? Term::zero() : Term::one();
  }
  const Json& op = field(j, "op");
  const Json& args = field(j, "args");
  if (!op.is_string() || !args.is_array()) malformed("term needs string 'op' and array 'args'");
  const std::string name = op.get<std::string>();
  auto arg = [&](std::size_t i) { return term_from_json(args.at(i)); };
  const std::size_t arity = (name == "!" || name == "~") ? 1 : 2;
  if (args.size() != arity) malformed("operator '" + name + "' takes " + std::to_string(arity) + " arguments");
  if (name == "&") return Term::meet(arg(0), arg(1));
  if (name == "|") return Term::join(arg(0), arg(1));
  if (name == "->") return Term::imp(arg(0), arg(1));
  if (name == "-<") return Term::coimp(arg(0), arg(1));
  if (name == "!") return Term::neg(arg(0));
  if (name == "~") return Term::coneg(arg(0));
  malformed("unknown operator '" + name + "'");
}

Json rule_to_json(const Rule& r) {
  Json premises = Json::array();
  for (const Equation& e : r.premises) premises.push_back(equation_json(e));
  return {{"premises", premises}, {"conclusion", equation_json(r.conclusion)}, {"arity", r.arity}};
}

Rule rule_from_json(const Json& j) {
  const Json& premises = field(j, "premises");
  if (!premises.is_array()) malformed("'premises' must be an array");
  std::vector<Equation> ps;
  for (const Json& p : premises) ps.push_back(equation_from_json(p));
  Equation conclusion = equation_from_json(field(j, "conclusion"));
  if (j.contains("arity")) {
    try {
      return make_rule(std::move(ps), std::move(conclusion), static_cast<unsigned>(index_field(j, "arity")));
    } catch (const Error& e) {
      malformed(e.what());
    }
  }
  return make_rule(std::move(ps), std::move(conclusion));
}

Rule rule_from_text(const std::string& text) {
  const auto first = std::find_if(text.begin(), text.end(), [](unsigned char c) { return !std::isspace(c); });
  if (first != text.end() && *first == '{') {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const Json::parse_error& e) {
      malformed(std::string("rule JSON: ") + e.what());
    }
    return rule_from_json(j);
  }
  return parse_rule(text);
}

Json congruence_to_json(const Congruence& c) { return c.classes(); }

std::string hasse_dot(const Poset& p, const std::string& name) {
  std::string out = "digraph " + name + " {\n  rankdir=BT;\n";
  for (Element i = 0; i < p.size(); ++i)
    out += "  n" + std::to_string(i) + " [label=\"" + dot_escape(p.label(i)) + "\"];\n";
  for (auto [lo, hi] : hasse_edges(p)) out += "  n" + std::to_string(lo) + " -> n" + std::to_string(hi) + ";\n";
  return out + "}\n";
}

}  // namespace biheyt
