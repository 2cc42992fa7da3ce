#include <gtest/gtest.h>

#include "blockdeg/cyclo.hpp"

using namespace blockdeg;

namespace {

std::vector<int> divisors(int m) {
  std::vector<int> out;
  for (int d = 1; d <= m; ++d)
    if (m % d == 0) out.push_back(d);
  return out;
}

// Smallest k >= 1 with q^k = 1 mod p, by repeated multiplication.
int naive_order(std::int64_t q, int p) {
  std::int64_t x = ((q % p) + p) % p;
  int k = 1;
  for (std::int64_t acc = x; acc != 1; acc = acc * x % p) ++k;
  return k;
}

}  // namespace

TEST(Cyclo, Coefficients) {
  EXPECT_EQ(cyclotomic_coefficients(1), (IntPoly{-1, 1}));
  EXPECT_EQ(cyclotomic_coefficients(6), (IntPoly{1, -1, 1}));
  EXPECT_EQ(cyclotomic_coefficients(12), (IntPoly{1, 0, -1, 0, 1}));
  EXPECT_EQ(cyclotomic_value(20, Rational(2)), 205);
}

TEST(Cyclo, ProductOverDivisorsIsQPowerMinusOne) {
  for (int m = 1; m <= 60; ++m)
    for (int q : {2, 3, 5, -2}) {
      Rational prod = 1;
      for (int d : divisors(m)) prod *= cyclotomic_value(d, Rational(q));
      EXPECT_EQ(prod, pow(Rational(q), m) - 1) << m << " " << q;
    }
}

TEST(Cyclo, Pochhammer) {
  auto keys = [](const CycloFactorization& f) {
    std::vector<int> out;
    for (auto [m, e] : f.factors) {
      EXPECT_EQ(e, 1);
      out.push_back(m);
    }
    return out;
  };
  EXPECT_EQ(keys(factor_q_pochhammer(6, -1)), (std::vector<int>{1, 2, 3, 6}));
  EXPECT_EQ(keys(factor_q_pochhammer(3, 1)), (std::vector<int>{2, 6}));
  EXPECT_EQ(keys(factor_q_pochhammer(1, 1)), (std::vector<int>{2}));
  for (int s = 1; s <= 30; ++s)
    for (int sign : {-1, 1})
      for (int q : {2, 3, 7})
        EXPECT_EQ(factor_q_pochhammer(s, sign).evaluate(Rational(q)), pow(Rational(q), s) + sign);
}

TEST(Cyclo, OrderData) {
  const OrderData o = order_data(2, 5);
  EXPECT_EQ(o.d, 4);
  EXPECT_EQ(o.e_bcd, 2);
  EXPECT_EQ(o.side, -1);
  EXPECT_EQ(o.e_a(-1), 4);
  for (int q : prime_powers_in(2, 32))
    for (int p : primes_in(5, 31)) {
      if (q % p == 0) continue;
      const OrderData od = order_data(q, p);
      EXPECT_EQ(od.d, naive_order(q, p));
      EXPECT_EQ(od.e_bcd, naive_order(static_cast<std::int64_t>(q) * q, p));
      EXPECT_EQ(od.e_a(-1), naive_order(-q, p));
    }
  EXPECT_THROW(order_data(6, 5), std::invalid_argument);
  EXPECT_THROW(order_data(25, 5), std::invalid_argument);
}

TEST(Cyclo, DividesPhi) {
  const OrderData o = order_data(2, 5);
  EXPECT_TRUE(p_divides_phi(4, o));
  EXPECT_TRUE(p_divides_phi(20, o));
  EXPECT_FALSE(p_divides_phi(8, o));
  for (int q : prime_powers_in(2, 16))
    for (int p : primes_in(5, 31)) {
      if (q % p == 0) continue;
      const OrderData od = order_data(q, p);
      for (int m = 1; m <= 60; ++m) {
        const int v = valuation(cyclotomic_value(m, Rational(q)), p);
        EXPECT_EQ(v > 0, p_divides_phi(m, od)) << q << " " << p << " " << m;
        if (m != od.d) {
          EXPECT_LE(v, 1) << q << " " << p << " " << m;
        }
      }
    }
}

TEST(Cyclo, Valuations) {
  EXPECT_EQ(p_valuation_of_value(Rational(205), 5), 1);
  EXPECT_EQ(p_valuation_of_value(Rational(7, 2), 5), 0);
  EXPECT_EQ(p_valuation_of_value(Rational(1), 13), 0);
  EXPECT_EQ(p_valuation_of_value(Rational(3, 25), 5), -2);
}
