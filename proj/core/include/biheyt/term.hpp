#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace biheyt {

// Immutable term over variables x1, x2, ..., constants 0 and 1, the binary
// connectives meet, join, implication, co-implication, and the unary sugar
// negation (t -> 0) and co-negation (1 -< t). Copies share structure.
class Term {
 public:
  enum class Kind { Variable, Zero, One, Meet, Join, Imp, Coimp, Neg, Coneg };

  static Term variable(unsigned index);  // 1-based
  static Term zero();
  static Term one();
  static Term meet(Term a, Term b);
  static Term join(Term a, Term b);
  static Term imp(Term a, Term b);
  static Term coimp(Term a, Term b);
  static Term neg(Term a);
  static Term coneg(Term a);

  Kind kind() const noexcept { return node_->kind; }
  unsigned index() const noexcept { return node_->index; }
  // Children; unary terms only have lhs().
  const Term& lhs() const { return node_->children.at(0); }
  const Term& rhs() const { return node_->children.at(1); }

  bool is_binary() const noexcept;
  bool is_unary() const noexcept { return kind() == Kind::Neg || kind() == Kind::Coneg; }

  // Largest variable index occurring, 0 for closed terms.
  unsigned max_variable() const;

  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Node {
    Kind kind;
    unsigned index = 0;
    std::vector<Term> children;
  };
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Term make(Kind kind, std::vector<Term> children);

  std::shared_ptr<const Node> node_;
};

struct Equation {
  Term left;
  Term right;

  friend bool operator==(const Equation&, const Equation&) = default;
};

// Quasi-equation: premises |- conclusion, over variables x1..x(arity).
struct Rule {
  std::vector<Equation> premises;
  Equation conclusion;
  unsigned arity = 0;

  friend bool operator==(const Rule&, const Rule&) = default;
};

unsigned max_variable(const Equation& e);

// Arity defaults to the largest variable used. Throws InvalidArgument if an
// explicit arity is smaller than that.
Rule make_rule(std::vector<Equation> premises, Equation conclusion);
Rule make_rule(std::vector<Equation> premises, Equation conclusion, unsigned arity);

// ASCII syntax: x1 x2 ..., 0, 1, & (meet), | (join), -> (imp), -< (coimp),
// ! (neg), ~ (coneg), parentheses. ! and ~ bind tightest, then &, then |,
// then -> and -< (right associative). Equations `s = t`; rules
// `p1 ; p2 |- c` (no premises: `|- c`). Throws Error(Parse).
Term parse_term(std::string_view text);
Equation parse_equation(std::string_view text);
Rule parse_rule(std::string_view text);

// Minimal-parenthesis rendering that parse_* reads back to the same tree.
std::string to_string(const Term& t);
std::string to_string(const Equation& e);
std::string to_string(const Rule& r);

// `!x1 = 0 ; ~x1 = 1 |- 0 = 1`. The premises hold exactly at elements that
// are both dense and co-dense, which no algebra of the form B x 2 has.
Rule middle_element_rule();

}  // namespace biheyt
