#pragma once

#include <cctype>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "blockdeg/cyclo.hpp"
#include "blockdeg/numeric.hpp"

namespace blockdeg {

/// Syntax error in a degree expression; `position` is a byte offset.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position) {}
  [[nodiscard]] std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class UnboundVariable : public std::invalid_argument {
 public:
  explicit UnboundVariable(const std::string& name) : std::invalid_argument("unbound variable '" + name + "'") {}
};

/// A factor evaluated to exactly zero in a denominator; signals a parameter
/// binding for which the expression is not defined.
class ZeroDenominator : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Variable bindings for evaluation. `eps` is read by the (q^k - eps^k) atoms.
using Bindings = std::map<std::string, std::int64_t, std::less<>>;

// ---------------------------------------------------------------------------
// Integer expressions over bound variables.

struct IntExpr {
  enum class Kind { Literal, Variable, Add, Sub, Mul, Neg };
  Kind kind = Kind::Literal;
  std::int64_t value = 0;
  std::string name;
  std::shared_ptr<const IntExpr> lhs;
  std::shared_ptr<const IntExpr> rhs;
};

using IntExprPtr = std::shared_ptr<const IntExpr>;

inline IntExprPtr int_literal(std::int64_t v) {
  auto e = std::make_shared<IntExpr>();
  e->kind = IntExpr::Kind::Literal;
  e->value = v;
  return e;
}

inline IntExprPtr int_variable(std::string name) {
  auto e = std::make_shared<IntExpr>();
  e->kind = IntExpr::Kind::Variable;
  e->name = std::move(name);
  return e;
}

inline IntExprPtr int_binary(IntExpr::Kind kind, IntExprPtr lhs, IntExprPtr rhs) {
  auto e = std::make_shared<IntExpr>();
  e->kind = kind;
  e->lhs = std::move(lhs);
  e->rhs = std::move(rhs);
  return e;
}

inline IntExprPtr int_negate(IntExprPtr operand) {
  auto e = std::make_shared<IntExpr>();
  e->kind = IntExpr::Kind::Neg;
  e->lhs = std::move(operand);
  return e;
}

inline std::int64_t evaluate(const IntExpr& e, const Bindings& env) {
  switch (e.kind) {
    case IntExpr::Kind::Literal:
      return e.value;
    case IntExpr::Kind::Variable: {
      auto it = env.find(e.name);
      if (it == env.end()) throw UnboundVariable(e.name);
      return it->second;
    }
    case IntExpr::Kind::Add:
      return evaluate(*e.lhs, env) + evaluate(*e.rhs, env);
    case IntExpr::Kind::Sub:
      return evaluate(*e.lhs, env) - evaluate(*e.rhs, env);
    case IntExpr::Kind::Mul:
      return evaluate(*e.lhs, env) * evaluate(*e.rhs, env);
    case IntExpr::Kind::Neg:
      return -evaluate(*e.lhs, env);
  }
  throw std::logic_error("unknown integer expression kind");
}

namespace detail {

inline int int_precedence(const IntExpr& e) {
  switch (e.kind) {
    case IntExpr::Kind::Add:
    case IntExpr::Kind::Sub:
      return 1;
    case IntExpr::Kind::Mul:
      return 2;
    case IntExpr::Kind::Neg:
      return 3;
    default:
      return 4;
  }
}

}  // namespace detail

inline std::string print(const IntExpr& e) {
  auto wrap = [](const IntExpr& sub, int min_prec) {
    std::string s = print(sub);
    return detail::int_precedence(sub) < min_prec ? "(" + s + ")" : s;
  };
  switch (e.kind) {
    case IntExpr::Kind::Literal:
      return e.value < 0 ? "(" + std::to_string(e.value) + ")" : std::to_string(e.value);
    case IntExpr::Kind::Variable:
      return e.name;
    case IntExpr::Kind::Add:
      return wrap(*e.lhs, 1) + "+" + wrap(*e.rhs, 2);
    case IntExpr::Kind::Sub:
      return wrap(*e.lhs, 1) + "-" + wrap(*e.rhs, 2);
    case IntExpr::Kind::Mul:
      return wrap(*e.lhs, 2) + "*" + wrap(*e.rhs, 3);
    case IntExpr::Kind::Neg:
      return "-" + wrap(*e.lhs, 4);
  }
  throw std::logic_error("unknown integer expression kind");
}

// ---------------------------------------------------------------------------
// Degree expressions.

enum class CycloSign { MinusOne, PlusOne, MinusEps };

struct DegreeNode;
using DegreeExpr = std::shared_ptr<const DegreeNode>;

struct DegreeNode {
  enum class Kind { Literal, QPower, Cyclo, Product, Power, RangeProduct };
  struct Term {
    DegreeExpr factor;
    bool divide = false;
  };

  Kind kind = Kind::Literal;
  Rational literal = 1;       // Literal
  IntExprPtr exponent;        // QPower, Cyclo: the k of q^k
  CycloSign sign = CycloSign::MinusOne;  // Cyclo
  std::vector<Term> terms;    // Product; terms.front().divide is false
  DegreeExpr base;            // Power
  int power = 1;              // Power
  std::string var;            // RangeProduct
  IntExprPtr lo;              // RangeProduct
  IntExprPtr hi;              // RangeProduct
  DegreeExpr body;            // RangeProduct
};

inline DegreeExpr make_literal(Rational v) {
  auto n = std::make_shared<DegreeNode>();
  n->kind = DegreeNode::Kind::Literal;
  n->literal = std::move(v);
  return n;
}

inline DegreeExpr make_qpower(IntExprPtr k) {
  auto n = std::make_shared<DegreeNode>();
  n->kind = DegreeNode::Kind::QPower;
  n->exponent = std::move(k);
  return n;
}

inline DegreeExpr make_cyclo(IntExprPtr k, CycloSign sign) {
  auto n = std::make_shared<DegreeNode>();
  n->kind = DegreeNode::Kind::Cyclo;
  n->exponent = std::move(k);
  n->sign = sign;
  return n;
}

inline DegreeExpr make_product(std::vector<DegreeNode::Term> terms) {
  if (terms.empty() || terms.front().divide) throw std::invalid_argument("product must start with a factor");
  auto n = std::make_shared<DegreeNode>();
  n->kind = DegreeNode::Kind::Product;
  n->terms = std::move(terms);
  return n;
}

inline DegreeExpr make_power(DegreeExpr base, int k) {
  auto n = std::make_shared<DegreeNode>();
  n->kind = DegreeNode::Kind::Power;
  n->base = std::move(base);
  n->power = k;
  return n;
}

inline DegreeExpr make_range_product(std::string var, IntExprPtr lo, IntExprPtr hi, DegreeExpr body) {
  auto n = std::make_shared<DegreeNode>();
  n->kind = DegreeNode::Kind::RangeProduct;
  n->var = std::move(var);
  n->lo = std::move(lo);
  n->hi = std::move(hi);
  n->body = std::move(body);
  return n;
}

// ---------------------------------------------------------------------------
// Printer. The output is accepted by parse_degree_expr.

inline std::string print(const DegreeExpr& e);

namespace detail {

inline std::string print_cyclo(const DegreeNode& n) {
  const std::string k = print(*n.exponent);
  switch (n.sign) {
    case CycloSign::MinusOne:
      return "(q^(" + k + ")-1)";
    case CycloSign::PlusOne:
      return "(q^(" + k + ")+1)";
    case CycloSign::MinusEps:
      return "(q^(" + k + ")-eps^(" + k + "))";
  }
  throw std::logic_error("unknown cyclotomic sign");
}

// A product of one undivided term prints as that term.
inline const DegreeExpr& unwrap(const DegreeExpr& e) {
  const DegreeExpr* cur = &e;
  while ((*cur)->kind == DegreeNode::Kind::Product && (*cur)->terms.size() == 1 && !(*cur)->terms[0].divide)
    cur = &(*cur)->terms[0].factor;
  return *cur;
}

inline std::string print_factor(const DegreeExpr& e) {
  if (unwrap(e)->kind == DegreeNode::Kind::Product) return "(" + print(e) + ")";
  return print(e);
}

}  // namespace detail

inline std::string print(const DegreeExpr& e) {
  const DegreeNode& n = *detail::unwrap(e);
  switch (n.kind) {
    case DegreeNode::Kind::Literal: {
      const std::string s = to_string(n.literal);
      return (n.literal < 0 || s.find('/') != std::string::npos) ? "(" + s + ")" : s;
    }
    case DegreeNode::Kind::QPower:
      return "q^(" + print(*n.exponent) + ")";
    case DegreeNode::Kind::Cyclo:
      return detail::print_cyclo(n);
    case DegreeNode::Kind::Product: {
      std::string out;
      for (std::size_t i = 0; i < n.terms.size(); ++i) {
        if (i) out += n.terms[i].divide ? "/" : "*";
        // "a/b" with literal b would reparse as one rational.
        const bool literal_divisor =
            n.terms[i].divide && detail::unwrap(n.terms[i].factor)->kind == DegreeNode::Kind::Literal;
        out += literal_divisor ? "(" + print(n.terms[i].factor) + ")" : detail::print_factor(n.terms[i].factor);
      }
      return out;
    }
    case DegreeNode::Kind::Power: {
      const bool bare = detail::unwrap(n.base)->kind == DegreeNode::Kind::Cyclo;
      const std::string b = bare ? print(n.base) : "(" + print(n.base) + ")";
      return b + "^" + std::to_string(n.power);
    }
    case DegreeNode::Kind::RangeProduct:
      return "prod(" + n.var + "=" + print(*n.lo) + ".." + print(*n.hi) + "; " + print(n.body) + ")";
  }
  throw std::logic_error("unknown degree expression kind");
}

// ---------------------------------------------------------------------------
// Parser.
//
//   expr    := factor { ("*" | "/") factor }
//   factor  := rational | "q" [ "^" atom ] | cyclo [ "^" integer ]
//            | "prod(" ident "=" intexpr ".." intexpr ";" expr ")"
//            | "(" expr ")" [ "^" integer ]
//   cyclo   := "(" "q" [ "^" atom ] ("-" | "+") "1" ")"
//            | "(" "q" [ "^" atom ] "-" "eps" [ "^" atom ] ")"
//   atom    := integer | ident | "(" intexpr ")"
//   intexpr := integer arithmetic with + - * and parentheses over identifiers

namespace detail {

class DegreeParser {
 public:
  explicit DegreeParser(std::string_view text) : text_(text) {}

  DegreeExpr parse_all() {
    DegreeExpr e = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return e;
  }

  IntExprPtr parse_int_all() {
    IntExprPtr e = parse_int();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  bool accept(std::string_view word) {
    skip_ws();
    if (text_.substr(pos_, word.size()) != word) return false;
    pos_ += word.size();
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool peek_digit() {
    skip_ws();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  bool peek_ident() {
    skip_ws();
    return pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_');
  }

  /// Identifier at the cursor without consuming it.
  std::string_view look_ident() {
    skip_ws();
    std::size_t end = pos_;
    while (end < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_')) ++end;
    return text_.substr(pos_, end - pos_);
  }

  std::string ident() {
    if (!peek_ident()) fail("expected identifier");
    std::string_view id = look_ident();
    pos_ += id.size();
    return std::string(id);
  }

  std::int64_t integer() {
    if (!peek_digit()) fail("expected integer");
    std::int64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > (std::int64_t{1} << 40)) fail("integer literal too large");
      ++pos_;
    }
    return v;
  }

  // intexpr
  IntExprPtr parse_int() {
    IntExprPtr lhs = parse_int_term();
    for (;;) {
      // ".." ends a range bound; a lone '-' or '+' continues the sum.
      if (accept('+')) {
        lhs = int_binary(IntExpr::Kind::Add, lhs, parse_int_term());
      } else if (peek('-')) {
        ++pos_;
        lhs = int_binary(IntExpr::Kind::Sub, lhs, parse_int_term());
      } else {
        return lhs;
      }
    }
  }

  IntExprPtr parse_int_term() {
    IntExprPtr lhs = parse_int_unary();
    while (accept('*')) lhs = int_binary(IntExpr::Kind::Mul, lhs, parse_int_unary());
    return lhs;
  }

  IntExprPtr parse_int_unary() {
    if (accept('-')) {
      return int_negate(parse_int_unary());
    }
    if (accept('(')) {
      IntExprPtr e = parse_int();
      expect(')');
      return e;
    }
    if (peek_digit()) return int_literal(integer());
    if (peek_ident()) {
      const std::string id = ident();
      if (id == "q" || id == "eps" || id == "prod") fail("'" + id + "' is reserved");
      return int_variable(id);
    }
    fail("expected integer expression");
  }

  IntExprPtr parse_exponent_atom() {
    if (accept('(')) {
      IntExprPtr e = parse_int();
      expect(')');
      return e;
    }
    if (peek_digit()) return int_literal(integer());
    if (peek_ident()) {
      const std::string id = ident();
      if (id == "q" || id == "eps" || id == "prod") fail("'" + id + "' is reserved");
      return int_variable(id);
    }
    fail("expected exponent");
  }

  /// "q" ["^" atom]; the cursor is on the q.
  IntExprPtr parse_q_exponent() {
    pos_ += 1;
    if (accept('^')) return parse_exponent_atom();
    return int_literal(1);
  }

  DegreeExpr parse_expr() {
    std::vector<DegreeNode::Term> terms;
    terms.push_back({parse_factor(), false});
    for (;;) {
      if (accept('*'))
        terms.push_back({parse_factor(), false});
      else if (accept('/'))
        terms.push_back({parse_factor(), true});
      else
        break;
    }
    if (terms.size() == 1) return terms.front().factor;
    return make_product(std::move(terms));
  }

  DegreeExpr parse_optional_power(DegreeExpr base) {
    if (accept('^')) {
      const bool neg = accept('-');
      const auto k = static_cast<int>(integer());
      return make_power(std::move(base), neg ? -k : k);
    }
    return base;
  }

  DegreeExpr parse_rational() {
    const bool neg = accept('-');
    std::int64_t num = integer();
    std::int64_t den = 1;
    // "a/b" binds as one literal only when b is a plain integer.
    const std::size_t save = pos_;
    if (accept('/')) {
      if (peek_digit()) {
        den = integer();
        if (den == 0) fail("zero denominator in literal");
      } else {
        pos_ = save;
      }
    }
    return make_literal(Rational(neg ? -num : num, den));
  }

  /// Tries the cyclotomic atom at '('; restores the cursor on mismatch.
  DegreeExpr try_cyclo() {
    const std::size_t save = pos_;
    auto restore = [&]() -> DegreeExpr {
      pos_ = save;
      return nullptr;
    };
    if (!accept('(')) return restore();
    if (look_ident() != "q") return restore();
    IntExprPtr k = parse_q_exponent();
    CycloSign sign;
    if (accept('+')) {
      sign = CycloSign::PlusOne;
    } else if (accept('-')) {
      sign = CycloSign::MinusOne;
    } else {
      return restore();
    }
    if (sign == CycloSign::MinusOne && look_ident() == "eps") {
      pos_ += 3;
      IntExprPtr k2 = accept('^') ? parse_exponent_atom() : int_literal(1);
      if (print(*k2) != print(*k)) fail("eps exponent must match the q exponent");
      sign = CycloSign::MinusEps;
    } else {
      skip_ws();
      const std::size_t one = pos_;
      if (!peek_digit() || integer() != 1) {
        pos_ = one;
        fail("expected 1 in cyclotomic factor");
      }
    }
    expect(')');
    return make_cyclo(std::move(k), sign);
  }

  DegreeExpr parse_factor() {
    skip_ws();
    if (peek_digit() || peek('-')) return parse_rational();
    if (peek_ident()) {
      const std::string_view id = look_ident();
      if (id == "q") return make_qpower(parse_q_exponent());
      if (id == "prod") {
        pos_ += 4;
        expect('(');
        std::string var = ident();
        expect('=');
        IntExprPtr lo = parse_int();
        if (!accept("..")) fail("expected '..'");
        IntExprPtr hi = parse_int();
        expect(';');
        DegreeExpr body = parse_expr();
        expect(')');
        return make_range_product(std::move(var), std::move(lo), std::move(hi), std::move(body));
      }
      fail("unexpected identifier '" + std::string(id) + "'");
    }
    if (peek('(')) {
      if (DegreeExpr c = try_cyclo()) return parse_optional_power(std::move(c));
      expect('(');
      DegreeExpr inner = parse_expr();
      expect(')');
      return parse_optional_power(std::move(inner));
    }
    fail("expected factor");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline DegreeExpr parse_degree_expr(std::string_view text) { return detail::DegreeParser(text).parse_all(); }

inline IntExprPtr parse_int_expr(std::string_view text) { return detail::DegreeParser(text).parse_int_all(); }

// ---------------------------------------------------------------------------
// Evaluation.

namespace detail {

inline std::int64_t eps_of(const Bindings& env) {
  auto it = env.find("eps");
  if (it == env.end()) throw UnboundVariable("eps");
  if (it->second != 1 && it->second != -1) throw std::invalid_argument("eps must be +1 or -1");
  return it->second;
}

/// The concrete sign (+1 for q^k + 1, -1 for q^k - 1) after binding eps.
inline int resolved_sign(const DegreeNode& n, std::int64_t k, const Bindings& env) {
  switch (n.sign) {
    case CycloSign::MinusOne:
      return -1;
    case CycloSign::PlusOne:
      return 1;
    case CycloSign::MinusEps: {
      const std::int64_t eps = eps_of(env);
      const bool eps_pow_is_one = eps == 1 || k % 2 == 0;
      return eps_pow_is_one ? -1 : 1;
    }
  }
  throw std::logic_error("unknown cyclotomic sign");
}

inline Rational evaluate_node(const DegreeNode& n, Bindings& env, const Rational& q0) {
  switch (n.kind) {
    case DegreeNode::Kind::Literal:
      return n.literal;
    case DegreeNode::Kind::QPower:
      return pow(q0, static_cast<int>(evaluate(*n.exponent, env)));
    case DegreeNode::Kind::Cyclo: {
      const std::int64_t k = evaluate(*n.exponent, env);
      return pow(q0, static_cast<int>(k)) + resolved_sign(n, k, env);
    }
    case DegreeNode::Kind::Product: {
      Rational acc = 1;
      for (const auto& t : n.terms) {
        Rational v = evaluate_node(*t.factor, env, q0);
        if (t.divide) {
          if (v == 0) throw ZeroDenominator("factor " + print(t.factor) + " vanishes in a denominator");
          acc /= v;
        } else {
          acc *= v;
        }
      }
      return acc;
    }
    case DegreeNode::Kind::Power: {
      Rational b = evaluate_node(*n.base, env, q0);
      if (b == 0 && n.power < 0) throw ZeroDenominator("zero base raised to a negative power");
      return pow(b, n.power);
    }
    case DegreeNode::Kind::RangeProduct: {
      const std::int64_t lo = evaluate(*n.lo, env);
      const std::int64_t hi = evaluate(*n.hi, env);
      auto saved = env.find(n.var) == env.end() ? std::optional<std::int64_t>{} : std::optional(env[n.var]);
      Rational acc = 1;
      for (std::int64_t i = lo; i <= hi; ++i) {
        env[n.var] = i;
        acc *= evaluate_node(*n.body, env, q0);
      }
      if (saved)
        env[n.var] = *saved;
      else
        env.erase(n.var);
      return acc;
    }
  }
  throw std::logic_error("unknown degree expression kind");
}

inline CycloFactorization factor_node(const DegreeNode& n, Bindings& env) {
  switch (n.kind) {
    case DegreeNode::Kind::Literal: {
      CycloFactorization f;
      f.scalar = n.literal;
      return f;
    }
    case DegreeNode::Kind::QPower: {
      CycloFactorization f;
      f.q_power = static_cast<int>(evaluate(*n.exponent, env));
      return f;
    }
    case DegreeNode::Kind::Cyclo: {
      const std::int64_t k = evaluate(*n.exponent, env);
      const int sign = resolved_sign(n, k, env);
      CycloFactorization f;
      if (k == 0) {
        if (sign == -1) throw ZeroDenominator("factor q^0 - 1 is zero");
        f.scalar = 2;
        return f;
      }
      if (k > 0) return factor_q_pochhammer(static_cast<int>(k), sign);
      // q^k + s = q^k (1 + s q^-k): 1 + q^-k, or -(q^-k - 1).
      f = factor_q_pochhammer(static_cast<int>(-k), sign);
      f.q_power += static_cast<int>(k);
      if (sign == -1) f.scalar = -f.scalar;
      return f;
    }
    case DegreeNode::Kind::Product: {
      CycloFactorization acc;
      for (const auto& t : n.terms) {
        CycloFactorization f = factor_node(*t.factor, env);
        if (t.divide) {
          if (f.scalar == 0) throw ZeroDenominator("zero factor in a denominator");
          acc /= f;
        } else {
          acc *= f;
        }
      }
      return acc;
    }
    case DegreeNode::Kind::Power:
      return factor_node(*n.base, env).pow(n.power);
    case DegreeNode::Kind::RangeProduct: {
      const std::int64_t lo = evaluate(*n.lo, env);
      const std::int64_t hi = evaluate(*n.hi, env);
      auto saved = env.find(n.var) == env.end() ? std::optional<std::int64_t>{} : std::optional(env[n.var]);
      CycloFactorization acc;
      for (std::int64_t i = lo; i <= hi; ++i) {
        env[n.var] = i;
        acc *= factor_node(*n.body, env);
      }
      if (saved)
        env[n.var] = *saved;
      else
        env.erase(n.var);
      return acc;
    }
  }
  throw std::logic_error("unknown degree expression kind");
}

}  // namespace detail

/// Exact value at q = q0. Empty range products are 1.
inline Rational evaluate(const DegreeExpr& e, Bindings env, const Rational& q0) {
  if (q0 <= 1) throw std::invalid_argument("evaluation point must exceed 1");
  return detail::evaluate_node(*e, env, q0);
}

inline Rational evaluate(const CycloFactorization& f, const Rational& q0) {
  if (q0 <= 1) throw std::invalid_argument("evaluation point must exceed 1");
  return f.evaluate(q0);
}

/// Symbolic form: every bound atom (q^k +- 1) becomes a product of Phi_m.
/// A zero atom anywhere raises ZeroDenominator.
inline CycloFactorization factorize(const DegreeExpr& e, Bindings env) { return detail::factor_node(*e, env); }

/// p-divisibility decided from the surviving Phi_{d p^i} exponents and the
/// scalar; independent of numeric evaluation.
inline int symbolic_p_valuation(const CycloFactorization& f, const OrderData& ord) {
  int v = valuation(f.scalar, ord.p);
  const Rational q0 = ord.q;
  for (auto [m, e] : f.factors)
    if (p_divides_phi(m, ord)) v += e * valuation(cyclotomic_value(m, q0), ord.p);
  return v;
}

}  // namespace blockdeg
