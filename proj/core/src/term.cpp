#include "biheyt/term.hpp"

#include <algorithm>
#include <cctype>

#include "biheyt/error.hpp"

namespace biheyt {

Term Term::make(Kind kind, std::vector<Term> children) {
  return Term(std::make_shared<const Node>(Node{kind, 0, std::move(children)}));
}

Term Term::variable(unsigned index) {
  if (index == 0) throw Error(ErrorKind::InvalidArgument, "variables are numbered from 1");
  return Term(std::make_shared<const Node>(Node{Kind::Variable, index, {}}));
}
Term Term::zero() { return make(Kind::Zero, {}); }
Term Term::one() { return make(Kind::One, {}); }
Term Term::meet(Term a, Term b) { return make(Kind::Meet, {std::move(a), std::move(b)}); }
Term Term::join(Term a, Term b) { return make(Kind::Join, {std::move(a), std::move(b)}); }
Term Term::imp(Term a, Term b) { return make(Kind::Imp, {std::move(a), std::move(b)}); }
Term Term::coimp(Term a, Term b) { return make(Kind::Coimp, {std::move(a), std::move(b)}); }
Term Term::neg(Term a) { return make(Kind::Neg, {std::move(a)}); }
Term Term::coneg(Term a) { return make(Kind::Coneg, {std::move(a)}); }

bool Term::is_binary() const noexcept {
  switch (kind()) {
    case Kind::Meet:
    case Kind::Join:
    case Kind::Imp:
    case Kind::Coimp:
      return true;
    default:
      return false;
  }
}

unsigned Term::max_variable() const {
  if (kind() == Kind::Variable) return index();
  unsigned m = 0;
  for (const Term& c : node_->children) m = std::max(m, c.max_variable());
  return m;
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.index() != b.index()) return false;
  const auto& ca = a.node_->children;
  const auto& cb = b.node_->children;
  return ca.size() == cb.size() && std::equal(ca.begin(), ca.end(), cb.begin());
}

unsigned max_variable(const Equation& e) { return std::max(e.left.max_variable(), e.right.max_variable()); }

Rule make_rule(std::vector<Equation> premises, Equation conclusion) {
  unsigned arity = max_variable(conclusion);
  for (const auto& p : premises) arity = std::max(arity, max_variable(p));
  return Rule{std::move(premises), std::move(conclusion), arity};
}

Rule make_rule(std::vector<Equation> premises, Equation conclusion, unsigned arity) {
  Rule r = make_rule(std::move(premises), std::move(conclusion));
  if (arity < r.arity)
    throw Error(ErrorKind::InvalidArgument, "rule uses x" + std::to_string(r.arity) +
                                                " but declares arity " + std::to_string(arity));
  r.arity = arity;
  return r;
}

namespace {

enum class Tok { Var, Zero, One, Meet, Join, Imp, Coimp, Neg, Coneg, LParen, RParen, Eq, Semi, Turnstile, End };

struct Token {
  Tok kind;
  std::size_t pos;
  unsigned index = 0;
};

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto fail = [&](const std::string& msg) -> Error {
    return Error(ErrorKind::Parse, msg + " at offset " + std::to_string(i));
  };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    const std::size_t start = i;
    auto two = [&](std::string_view s) { return text.substr(i, 2) == s; };
    if (c == 'x') {
      ++i;
      std::size_t digits = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (digits == i) throw fail("expected digits after 'x'");
      const unsigned long value = std::stoul(std::string(text.substr(digits, i - digits)));
      if (value == 0 || value > 1'000'000) throw fail("variable index out of range");
      out.push_back({Tok::Var, start, static_cast<unsigned>(value)});
    } else if (two("->")) {
      out.push_back({Tok::Imp, start});
      i += 2;
    } else if (two("-<")) {
      out.push_back({Tok::Coimp, start});
      i += 2;
    } else if (two("|-")) {
      out.push_back({Tok::Turnstile, start});
      i += 2;
    } else {
      Tok kind;
      switch (c) {
        case '0': kind = Tok::Zero; break;
        case '1': kind = Tok::One; break;
        case '&': kind = Tok::Meet; break;
        case '|': kind = Tok::Join; break;
        case '!': kind = Tok::Neg; break;
        case '~': kind = Tok::Coneg; break;
        case '(': kind = Tok::LParen; break;
        case ')': kind = Tok::RParen; break;
        case '=': kind = Tok::Eq; break;
        case ';': kind = Tok::Semi; break;
        default: throw fail(std::string("unexpected character '") + c + "'");
      }
      out.push_back({kind, start});
      ++i;
    }
  }
  out.push_back({Tok::End, text.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(lex(text)) {}

  Term term() { return implication(); }

  Equation equation() {
    Term l = term();
    expect(Tok::Eq, "'='");
    Term r = term();
    return {std::move(l), std::move(r)};
  }

  Rule rule() {
    std::vector<Equation> premises;
    if (peek() != Tok::Turnstile) {
      premises.push_back(equation());
      while (accept(Tok::Semi)) premises.push_back(equation());
    }
    expect(Tok::Turnstile, "'|-'");
    Equation conclusion = equation();
    return make_rule(std::move(premises), std::move(conclusion));
  }

  void finish() { expect(Tok::End, "end of input"); }

 private:
  Tok peek() const { return tokens_[pos_].kind; }
  bool accept(Tok k) {
    if (peek() != k) return false;
    ++pos_;
    return true;
  }
  void expect(Tok k, const char* what) {
    if (!accept(k))
      throw Error(ErrorKind::Parse, std::string("expected ") + what + " at offset " +
                                        std::to_string(tokens_[pos_].pos));
  }

  Term implication() {
    Term lhs = disjunction();
    if (accept(Tok::Imp)) return Term::imp(std::move(lhs), implication());
    if (accept(Tok::Coimp)) return Term::coimp(std::move(lhs), implication());
    return lhs;
  }
  Term disjunction() {
    Term t = conjunction();
    while (accept(Tok::Join)) t = Term::join(std::move(t), conjunction());
    return t;
  }
  Term conjunction() {
    Term t = unary();
    while (accept(Tok::Meet)) t = Term::meet(std::move(t), unary());
    return t;
  }
  Term unary() {
    if (accept(Tok::Neg)) return Term::neg(unary());
    if (accept(Tok::Coneg)) return Term::coneg(unary());
    return atom();
  }
  Term atom() {
    const Token& t = tokens_[pos_];
    switch (t.kind) {
      case Tok::Var: ++pos_; return Term::variable(t.index);
      case Tok::Zero: ++pos_; return Term::zero();
      case Tok::One: ++pos_; return Term::one();
      case Tok::LParen: {
        ++pos_;
        Term inner = implication();
        expect(Tok::RParen, "')'");
        return inner;
      }
      default:
        throw Error(ErrorKind::Parse, "expected a term at offset " + std::to_string(t.pos));
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

int precedence(Term::Kind k) {
  switch (k) {
    case Term::Kind::Imp:
    case Term::Kind::Coimp: return 1;
    case Term::Kind::Join: return 2;
    case Term::Kind::Meet: return 3;
    case Term::Kind::Neg:
    case Term::Kind::Coneg: return 4;
    default: return 5;
  }
}

void render(const Term& t, std::string& out);

void render_child(const Term& child, bool parens, std::string& out) {
  if (parens) out += '(';
  render(child, out);
  if (parens) out += ')';
}

void render(const Term& t, std::string& out) {
  const int p = precedence(t.kind());
  switch (t.kind()) {
    case Term::Kind::Variable: out += "x" + std::to_string(t.index()); return;
    case Term::Kind::Zero: out += '0'; return;
    case Term::Kind::One: out += '1'; return;
    case Term::Kind::Neg:
    case Term::Kind::Coneg:
      out += t.kind() == Term::Kind::Neg ? '!' : '~';
      render_child(t.lhs(), precedence(t.lhs().kind()) < p, out);
      return;
    default: break;
  }
  const char* op = t.kind() == Term::Kind::Meet   ? " & "
                   : t.kind() == Term::Kind::Join ? " | "
                   : t.kind() == Term::Kind::Imp  ? " -> "
                                                  : " -< ";
  // & and | associate left, -> and -< associate right.
  const bool right_assoc = p == 1;
  const int lp = precedence(t.lhs().kind()), rp = precedence(t.rhs().kind());
  render_child(t.lhs(), right_assoc ? lp <= p : lp < p, out);
  out += op;
  render_child(t.rhs(), right_assoc ? rp < p : rp <= p, out);
}

}  // namespace

Term parse_term(std::string_view text) {
  Parser p(text);
  Term t = p.term();
  p.finish();
  return t;
}

Equation parse_equation(std::string_view text) {
  Parser p(text);
  Equation e = p.equation();
  p.finish();
  return e;
}

Rule parse_rule(std::string_view text) {
  Parser p(text);
  Rule r = p.rule();
  p.finish();
  return r;
}

std::string to_string(const Term& t) {
  std::string out;
  render(t, out);
  return out;
}

std::string to_string(const Equation& e) { return to_string(e.left) + " = " + to_string(e.right); }

std::string to_string(const Rule& r) {
  std::string out;
  for (std::size_t i = 0; i < r.premises.size(); ++i) {
    if (i) out += " ; ";
    out += to_string(r.premises[i]);
  }
  if (!out.empty()) out += ' ';
  return out + "|- " + to_string(r.conclusion);
}

Rule middle_element_rule() {
  const Term x = Term::variable(1);
  return make_rule({{Term::neg(x), Term::zero()}, {Term::coneg(x), Term::one()}}, {Term::zero(), Term::one()});
}

}  // namespace biheyt
