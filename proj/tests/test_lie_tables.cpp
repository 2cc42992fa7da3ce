#include <gtest/gtest.h>

#include <set>

#include "blockdeg/lie_tables.hpp"

using namespace blockdeg;

namespace {

const TableRow& row_by_id(const std::string& id) {
  for (const auto& r : table_data().rows)
    if (r.id == id) return r;
  throw std::out_of_range(id);
}

const ExceptionRow& exception_by_id(const std::string& id) {
  for (const auto& r : table_data().exceptions)
    if (r.id == id) return r;
  throw std::out_of_range(id);
}

// q'-part of the group order, multiplied out.
BigInt order_qprime(LieType t, int n, int q) {
  auto qk = [q](int k) -> BigInt { return boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(k)); };
  BigInt acc = 1;
  switch (t) {
    case LieType::A:
      for (int i = 2; i <= n; ++i) acc *= qk(i) - 1;
      break;
    case LieType::A2:
      for (int i = 2; i <= n; ++i) acc *= qk(i) - (i % 2 ? -1 : 1);
      break;
    case LieType::B:
    case LieType::C:
      for (int i = 1; i <= n; ++i) acc *= qk(2 * i) - 1;
      break;
    case LieType::D:
    case LieType::D2:
      acc = qk(n) + (t == LieType::D ? -1 : 1);
      for (int i = 1; i < n; ++i) acc *= qk(2 * i) - 1;
      break;
  }
  return acc;
}

// Gaussian binomial [a choose b] at q.
Rational gaussian(int a, int b, int q) {
  Rational v = 1;
  for (int i = 0; i < b; ++i) v *= (pow(Rational(q), a - i) - 1) / (pow(Rational(q), i + 1) - 1);
  return v;
}

std::vector<GroupContext> small_grid() {
  std::vector<GroupContext> out;
  for (LieType t : {LieType::A, LieType::A2, LieType::B, LieType::C, LieType::D, LieType::D2})
    for (int n = 3; n <= 7; ++n)
      for (int q : {2, 3, 4, 5, 7, 8, 9})
        for (int p : {5, 7, 11, 13}) {
          if (q % p == 0) continue;
          const GroupContext c = make_context(t, n, q, p);
          if (divides_group_order(c) && simple_group_case(c)) out.push_back(c);
        }
  return out;
}

}  // namespace

TEST(LieTables, DataLoads) {
  const TableData& d = table_data();
  EXPECT_EQ(d.schema, "blockdeg-tables/1");
  std::set<std::string> ids;
  for (const auto& r : d.rows) EXPECT_TRUE(ids.insert(r.id).second) << r.id;
  for (const auto& r : d.exceptions) EXPECT_TRUE(ids.insert(r.id).second) << r.id;
  EXPECT_EQ(d.rows_for(TableFamily::A, 1).size(), 4U);
  EXPECT_EQ(d.rows_for(TableFamily::A, 2).size(), 4U);
  EXPECT_EQ(d.rows_for(TableFamily::BC, 1).size(), 3U);
  EXPECT_EQ(d.rows_for(TableFamily::BC, 2).size(), 5U);
  EXPECT_EQ(d.rows_for(TableFamily::D, 1).size(), 3U);
  EXPECT_EQ(d.rows_for(TableFamily::D, 2).size(), 7U);
  EXPECT_EQ(d.rows_for(TableFamily::D2, 1).size(), 5U);
  EXPECT_EQ(d.rows_for(TableFamily::D2, 2).size(), 7U);
  for (const auto& r : d.rows) EXPECT_EQ(print(parse_degree_expr(print(r.degree))), print(r.degree)) << r.id;
}

TEST(LieTables, RejectsUnknownAtomsAndTypes) {
  const char* bad = R"({"schema":"blockdeg-tables/1","rows":[{"id":"x","type":"A","slot":1,
    "conditions":[["e=7"]],"label":"n","degree":"1"}],"exceptions":[]})";
  EXPECT_THROW(load_table_data(bad), std::invalid_argument);
  EXPECT_THROW(parse_lie_type("E8"), UnsupportedType);
  for (auto [name, atom] : kAtomNames) EXPECT_EQ(atom_name(parse_atom(name)), name);
}

TEST(LieTables, Context) {
  const GroupContext a = make_context(LieType::A, 4, 2, 5);
  EXPECT_EQ(a.e, 4);
  EXPECT_EQ(a.r, 0);
  EXPECT_EQ(a.m, 1);
  EXPECT_EQ(a.ell, 2);
  const GroupContext u = make_context(LieType::A2, 4, 2, 5);
  EXPECT_EQ(u.eps, -1);
  EXPECT_EQ(u.e, 4);  // order of -2 mod 5
  const GroupContext b = make_context(LieType::B, 4, 2, 5);
  EXPECT_EQ(b.e, 2);
  EXPECT_EQ(b.side, -1);
  EXPECT_THROW(make_context(LieType::B, 4, 2, 3), std::invalid_argument);
  EXPECT_THROW(make_context(LieType::B, 4, 10, 7), std::invalid_argument);
}

TEST(LieTables, GroupOrderDivisibility) {
  for (LieType t : {LieType::A, LieType::A2, LieType::B, LieType::C, LieType::D, LieType::D2})
    for (int n = 2; n <= 8; ++n)
      for (int q : prime_powers_in(2, 32))
        for (int p : primes_in(5, 31)) {
          if (q % p == 0) continue;
          const GroupContext c = make_context(t, n, q, p);
          EXPECT_EQ(divides_group_order(c), order_qprime(t, n, q) % p == 0) << c.str();
        }
}

TEST(LieTables, LabelTemplates) {
  const Bindings env{{"n", 7}, {"m", 2}, {"e", 3}, {"r", 1}, {"eps", 1}};
  EXPECT_EQ(to_string(bind_label(parse_label_template("r+1, m*e-1"), env)), "(5,2)");
  EXPECT_EQ(to_string(bind_label(parse_label_template("e^2, 1"), env)), "(3,3,1)");
  EXPECT_EQ(to_string(bind_label(parse_label_template("0..e-1, m*e | 1..e"), env)), "(0,1,2,6|1,2,3)");
  EXPECT_EQ(to_string(bind_label(parse_label_template("n |"), env)), "(7|)");
  EXPECT_THROW(bind_label(parse_label_template("r-1"), env), std::invalid_argument);
  EXPECT_THROW(bind_label(parse_label_template("1, 1 | 0"), env), std::invalid_argument);
}

TEST(LieTables, RowApplicability) {
  const GroupContext a = make_context(LieType::A, 4, 2, 5);
  EXPECT_TRUE(row_applicable(row_by_id("A.chi1.3"), a));
  EXPECT_FALSE(row_applicable(row_by_id("A.chi1.1"), a));
  const GroupContext b = make_context(LieType::B, 4, 2, 5);
  ASSERT_EQ(b.e, 2);
  EXPECT_TRUE(row_applicable(row_by_id("BC.chi2.1"), b));
}

TEST(LieTables, TypeARowAtFour) {
  const GroupContext a = make_context(LieType::A, 4, 2, 5);
  const RowVerdict v = verify_row(row_by_id("A.chi1.3"), a);
  EXPECT_EQ(v.label, "(3,1)");
  EXPECT_EQ(v.degree, 7);
  EXPECT_EQ(v.p_valuation, 0);
  EXPECT_TRUE(v.pass()) << v.failure;

  const CoverageVerdict cov = coverage_and_distinctness(a);
  EXPECT_TRUE(cov.covered());
  EXPECT_TRUE(cov.pass());
  EXPECT_EQ(cov.distinctness, Distinctness::Distinct);
  ASSERT_TRUE(cov.pick1 && cov.pick2);
  std::set<Rational> got{cov.slot1[*cov.pick1].degree, cov.slot2[*cov.pick2].degree};
  EXPECT_EQ(got, (std::set<Rational>{1, 7}));
}

TEST(LieTables, SteinbergRowWhenEDividesN) {
  for (const GroupContext& c : small_grid()) {
    if (family_of(c.type) != TableFamily::BC || c.n % c.e != 0) continue;
    const RowVerdict v = verify_row(row_by_id("BC.chi2.1"), c);
    EXPECT_EQ(v.degree, 1) << c.str();
    EXPECT_EQ(rank_defect(std::get<Symbol>(bind_label(*row_by_id("BC.chi2.1").label, bindings_of(c)))),
              (RankDefect{c.n, 1}));
    EXPECT_TRUE(v.pass()) << c.str() << " " << v.failure;
  }
}

TEST(LieTables, TrivialLabelClosedForms) {
  for (const GroupContext& c : small_grid()) {
    const TrivialLabel t = trivial_label(c);
    EXPECT_TRUE(label_valid(t.label, c)) << c.str();
    if (const auto* l = std::get_if<Partition>(&t.label)) {
      EXPECT_EQ(Label(p_core(*l, c.e)), t.core) << c.str();
    } else {
      EXPECT_EQ(Label(e_core(std::get<Symbol>(t.label), c.e)), t.core) << c.str();
      EXPECT_EQ(Label(e_cocore(std::get<Symbol>(t.label), c.e)), t.cocore) << c.str();
    }
  }
}

TEST(LieTables, QAnalogueDegrees) {
  for (int q : {2, 3, 5}) {
    const Rational Q(q);
    EXPECT_EQ(unipotent_degree_typeA(Partition{1, 1}, 1, Q), Q);
    EXPECT_EQ(unipotent_degree_typeA(Partition{2, 1}, 1, Q), Q * (Q + 1));
    EXPECT_EQ(unipotent_degree_typeA(Partition{2, 1}, -1, Q), Q * (Q - 1));
    for (int n = 1; n <= 8; ++n) {
      EXPECT_EQ(unipotent_degree_typeA(Partition{n}, 1, Q), 1);
      // Hooks (n-k, 1^k): q^{k(k+1)/2} times the Gaussian binomial [n-1, k].
      for (int k = 0; k < n; ++k) {
        std::vector<int> parts{n - k};
        parts.insert(parts.end(), static_cast<std::size_t>(k), 1);
        EXPECT_EQ(unipotent_degree_typeA(Partition(parts), 1, Q), pow(Q, k * (k + 1) / 2) * gaussian(n - 1, k, q));
      }
    }
  }
}

TEST(LieTables, TypeATableAgreesWithHookFormula) {
  int checked = 0;
  for (const GroupContext& c : small_grid()) {
    if (family_of(c.type) != TableFamily::A || !within_main_guards(c)) continue;
    for (const TypeAMatch& m : typeA_crosscheck(c)) {
      ++checked;
      EXPECT_TRUE(m.agrees) << c.str() << " " << m.row_id << " " << m.label;
    }
  }
  EXPECT_GT(checked, 50);
}

TEST(LieTables, D4) {
  const D4Verdict a = verify_d4(2, 5);
  EXPECT_EQ(a.e, 2);
  EXPECT_EQ(a.chi1, 4096);
  EXPECT_EQ(a.chi2, 972);
  EXPECT_TRUE(a.holds());
  const D4Verdict b = verify_d4(3, 5);
  EXPECT_EQ(b.chi1, 531441);
  EXPECT_EQ(b.chi2, 24192);
  EXPECT_TRUE(b.holds());
  const D4Verdict c = verify_d4(2, 7);
  EXPECT_EQ(c.e, 3);
  EXPECT_EQ(c.chi2, 50);
  EXPECT_TRUE(c.holds());
  for (int q : prime_powers_in(2, 64))
    for (int p : primes_in(5, 31)) {
      if (q % p == 0) continue;
      const D4Verdict v = verify_d4(q, p);
      if (!v.applicable) continue;
      const Rational Q(q);
      const Rational want = v.e == 2 ? Q * Q * Q * pow(Q + 1, 3) * (Q * Q * Q + 1) / 2 : Q * pow(Q * Q + 1, 2);
      EXPECT_EQ(v.chi1, pow(Q, 12));
      EXPECT_EQ(v.chi2, want) << q << " " << p;
    }
  EXPECT_EQ(exception_by_id("D4.chi1").slot, 1);
}

TEST(LieTables, Exceptions) {
  auto find = [](ExceptionFamily f, int q, int p, int sign) {
    for (const auto& v : verify_exceptions(f, q, p))
      if (v.sign == sign) return v;
    throw std::out_of_range("no verdict");
  };
  const ExceptionVerdict a = find(ExceptionFamily::PSL2, 9, 5, 1);
  EXPECT_EQ(a.degree, 8);
  EXPECT_TRUE(a.holds);
  const ExceptionVerdict b = find(ExceptionFamily::PSL3eps, 4, 5, 1);
  EXPECT_EQ(b.degree, 63);
  EXPECT_TRUE(b.holds);
  const ExceptionVerdict c = find(ExceptionFamily::PSL2, 11, 5, -1);
  EXPECT_EQ(c.degree, 12);
  EXPECT_TRUE(c.holds);
  EXPECT_TRUE(verify_exceptions(ExceptionFamily::Sp4evenQ, 2, 5).empty());
  for (const auto& v : verify_exceptions(ExceptionFamily::Sp4evenQ, 8, 5)) EXPECT_TRUE(v.holds) << v.detail;
}

TEST(LieTables, QPrimeComparison) {
  EXPECT_EQ(compare_qprime(7, 1), Distinctness::Distinct);
  EXPECT_EQ(compare_qprime(3, 3), Distinctness::Collision);
  EXPECT_EQ(compare_qprime(6, 3), Distinctness::HalfAmbiguous);
  EXPECT_EQ(compare_qprime(6, 3, false), Distinctness::Distinct);
}
