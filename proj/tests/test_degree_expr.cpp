#include <gtest/gtest.h>

#include <random>

#include "blockdeg/degree_expr.hpp"

using namespace blockdeg;

namespace {

Rational eval(std::string_view text, const Bindings& env, int q) { return evaluate(parse_degree_expr(text), env, Rational(q)); }

// Random expressions over the grammar, with range variables i and j.
class ExprGen {
 public:
  explicit ExprGen(std::uint32_t seed) : rng_(seed) {}

  DegreeExpr expr(int depth, std::vector<std::string> vars) {
    const int pick = depth <= 0 ? uniform(0, 2) : uniform(0, 5);
    switch (pick) {
      case 0:
        return make_literal(Rational(uniform(1, 9), uniform(1, 4)));
      case 1:
        return make_qpower(intexpr(2, vars));
      case 2: {
        const CycloSign signs[] = {CycloSign::MinusOne, CycloSign::PlusOne, CycloSign::MinusEps};
        return make_cyclo(intexpr(2, vars), signs[uniform(0, 2)]);
      }
      case 3: {
        std::vector<DegreeNode::Term> terms;
        const int k = uniform(1, 3);
        for (int t = 0; t < k; ++t) terms.push_back({expr(depth - 1, vars), t > 0 && uniform(0, 2) == 0});
        return make_product(std::move(terms));
      }
      case 4:
        return make_power(expr(depth - 1, vars), uniform(1, 3));
      default: {
        auto bound = [&](const char* name) { return std::find(vars.begin(), vars.end(), name) != vars.end(); };
        if (bound("i") && bound("j")) return expr(depth - 1, vars);
        const std::string v = bound("i") ? "j" : "i";
        auto lo = intexpr(1, vars);
        auto hi = intexpr(1, vars);
        vars.push_back(v);
        return make_range_product(v, lo, hi, expr(depth - 1, vars));
      }
    }
  }

  IntExprPtr intexpr(int depth, const std::vector<std::string>& vars) {
    const int pick = depth <= 0 ? uniform(0, 1) : uniform(0, 5);
    switch (pick) {
      case 0:
        return int_literal(uniform(0, 6));
      case 1:
        return int_variable(vars[static_cast<std::size_t>(uniform(0, static_cast<int>(vars.size()) - 1))]);
      case 2:
        return int_binary(IntExpr::Kind::Add, intexpr(depth - 1, vars), intexpr(depth - 1, vars));
      case 3:
        return int_binary(IntExpr::Kind::Sub, intexpr(depth - 1, vars), intexpr(depth - 1, vars));
      case 4:
        return int_binary(IntExpr::Kind::Mul, intexpr(depth - 1, vars), intexpr(depth - 1, vars));
      default:
        return int_negate(intexpr(depth - 1, vars));
    }
  }

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

 private:
  std::mt19937 rng_;
};

const std::vector<std::string> kVars{"n", "m", "e", "r"};

}  // namespace

TEST(DegreeExpr, ParseExamples) {
  const Bindings env{{"n", 5}, {"e", 2}, {"eps", 1}};
  EXPECT_EQ(eval("(q^(n)-1)/(q-1)", env, 2), 31);
  EXPECT_EQ(eval("prod(i=1..e; (q^(n-i)-1)/(q^(i)-1))", env, 2), Rational(15 * 7, 1 * 3));
  EXPECT_EQ(eval("1/2*q^3*(q+1)^3*(q^3+1)", {}, 2), 972);
  EXPECT_EQ(eval("(q^6-1)", {}, 2), 63);
  EXPECT_EQ(eval("prod(i=1..0; (q-1)^5)", {}, 3), 1);
  EXPECT_EQ(eval("(q^(3)-eps^(3))", {{"eps", -1}}, 4), 65);
  EXPECT_EQ(eval("(q^(2)-eps^(2))", {{"eps", -1}}, 4), 15);
}

TEST(DegreeExpr, Errors) {
  EXPECT_THROW(parse_degree_expr("(q^(n)-1"), ParseError);
  EXPECT_THROW(parse_degree_expr("q^(n) q"), ParseError);
  EXPECT_THROW(parse_degree_expr("(q^(n)-2)"), ParseError);
  EXPECT_THROW(eval("q^(k)", {}, 2), UnboundVariable);
  EXPECT_THROW(eval("1/(q^(n)-1)", {{"n", 0}}, 2), ZeroDenominator);
  EXPECT_THROW(eval("q", {}, 1), std::invalid_argument);
}

TEST(DegreeExpr, PrintParseRoundTrip) {
  ExprGen gen(20240611);
  for (int t = 0; t < 2000; ++t) {
    const DegreeExpr e = gen.expr(4, kVars);
    const std::string text = print(e);
    DegreeExpr back;
    ASSERT_NO_THROW(back = parse_degree_expr(text)) << text;
    EXPECT_EQ(print(back), text);
    const Bindings env{{"n", gen.uniform(0, 6)}, {"m", gen.uniform(0, 3)}, {"e", gen.uniform(1, 4)},
                       {"r", gen.uniform(0, 3)}, {"eps", gen.uniform(0, 1) ? 1 : -1}};
    try {
      EXPECT_EQ(evaluate(e, env, Rational(3)), evaluate(back, env, Rational(3))) << text;
    } catch (const ZeroDenominator&) {
    }
  }
}

TEST(DegreeExpr, FactorizationEvaluatesBackAndKnowsValuations) {
  ExprGen gen(7);
  int compared = 0;
  for (int t = 0; t < 3000; ++t) {
    const DegreeExpr e = gen.expr(3, kVars);
    const Bindings env{{"n", gen.uniform(1, 6)}, {"m", gen.uniform(1, 3)}, {"e", gen.uniform(1, 4)},
                       {"r", gen.uniform(0, 3)}, {"eps", gen.uniform(0, 1) ? 1 : -1}};
    CycloFactorization f;
    Rational direct;
    try {
      f = factorize(e, env);
      direct = evaluate(e, env, Rational(4));
    } catch (const ZeroDenominator&) {
      continue;
    }
    ++compared;
    EXPECT_EQ(f.evaluate(Rational(4)), direct) << print(e);
    if (direct == 0) continue;
    for (int p : {5, 7, 13, 17})
      EXPECT_EQ(symbolic_p_valuation(f, order_data(4, p)), valuation(direct, p)) << print(e) << " p=" << p;
  }
  EXPECT_GT(compared, 1000);
}

TEST(DegreeExpr, FactorsOfCycloAtoms) {
  const CycloFactorization f = factorize(parse_degree_expr("(q^(6)-1)/(q^(2)-1)*q^(3)"), {});
  EXPECT_EQ(f.q_power, 3);
  EXPECT_EQ(f.factors, (std::map<int, int>{{3, 1}, {6, 1}}));
  const CycloFactorization g = factorize(parse_degree_expr("(q^(3)-eps^(3))"), {{"eps", -1}});
  EXPECT_EQ(g.factors, (std::map<int, int>{{2, 1}, {6, 1}}));
}
