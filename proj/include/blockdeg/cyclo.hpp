#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "blockdeg/numeric.hpp"

namespace blockdeg {

/// Integer polynomial, coefficient of q^i at index i.
using IntPoly = std::vector<std::int64_t>;

namespace detail {

inline IntPoly exact_divide(IntPoly num, const IntPoly& den) {
  // den is monic, so long division stays in the integers.
  const std::size_t dn = den.size() - 1;
  if (num.size() < den.size()) throw InternalConsistencyError("cyclotomic division: degree too small");
  IntPoly quot(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const std::int64_t c = num[i];
    quot[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  for (std::size_t i = 0; i < dn; ++i)
    if (num[i] != 0) throw InternalConsistencyError("cyclotomic division left a remainder");
  return quot;
}

}  // namespace detail

/// Coefficients of the m-th cyclotomic polynomial: q^m - 1 divided by Phi_d
/// for every proper divisor d of m. Results are cached process-wide.
inline IntPoly cyclotomic_coefficients(int m) {
  if (m < 1) throw std::invalid_argument("cyclotomic index must be positive");
  static std::mutex mutex;
  static std::map<int, IntPoly> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(m); it != cache.end()) return it->second;
  }
  IntPoly poly(static_cast<std::size_t>(m) + 1, 0);
  poly[0] = -1;
  poly[static_cast<std::size_t>(m)] = 1;
  for (int d = 1; d < m; ++d)
    if (m % d == 0) poly = detail::exact_divide(std::move(poly), cyclotomic_coefficients(d));
  std::lock_guard lock(mutex);
  return cache.emplace(m, std::move(poly)).first->second;
}

inline Rational evaluate_poly(const IntPoly& poly, const Rational& q0) {
  Rational acc = 0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * q0 + Rational(*it);
  return acc;
}

inline Rational cyclotomic_value(int m, const Rational& q0) { return evaluate_poly(cyclotomic_coefficients(m), q0); }

/// scalar * q^q_power * prod_m Phi_m^{e_m}; zero exponents never stored.
struct CycloFactorization {
  Rational scalar = 1;
  int q_power = 0;
  std::map<int, int> factors;

  CycloFactorization& operator*=(const CycloFactorization& rhs) {
    scalar *= rhs.scalar;
    q_power += rhs.q_power;
    for (auto [m, e] : rhs.factors) bump(m, e);
    return *this;
  }
  CycloFactorization& operator/=(const CycloFactorization& rhs) {
    if (rhs.scalar == 0) throw std::domain_error("division by a zero scalar");
    scalar /= rhs.scalar;
    q_power -= rhs.q_power;
    for (auto [m, e] : rhs.factors) bump(m, -e);
    return *this;
  }
  friend CycloFactorization operator*(CycloFactorization a, const CycloFactorization& b) { return a *= b; }
  friend CycloFactorization operator/(CycloFactorization a, const CycloFactorization& b) { return a /= b; }

  [[nodiscard]] CycloFactorization pow(int k) const {
    CycloFactorization out;
    out.scalar = blockdeg::pow(scalar, k);
    out.q_power = q_power * k;
    if (k != 0)
      for (auto [m, e] : factors) out.factors[m] = e * k;
    return out;
  }

  [[nodiscard]] Rational evaluate(const Rational& q0) const {
    Rational v = scalar * blockdeg::pow(q0, q_power);
    for (auto [m, e] : factors) v *= blockdeg::pow(cyclotomic_value(m, q0), e);
    return v;
  }

  [[nodiscard]] std::string str() const {
    std::string out = to_string(scalar);
    if (q_power != 0) out += "*q^" + std::to_string(q_power);
    for (auto [m, e] : factors) {
      out += "*Phi" + std::to_string(m);
      if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
  }

  friend bool operator==(const CycloFactorization&, const CycloFactorization&) = default;

 private:
  void bump(int m, int e) {
    const int v = factors[m] += e;
    if (v == 0) factors.erase(m);
  }
};

/// q^s - 1 (sign = -1) or q^s + 1 (sign = +1) as a product of Phi_m.
inline CycloFactorization factor_q_pochhammer(int s, int sign) {
  if (s < 1) throw std::invalid_argument("factor_q_pochhammer: s must be positive");
  if (sign != 1 && sign != -1) throw std::invalid_argument("factor_q_pochhammer: sign must be +1 or -1");
  CycloFactorization out;
  if (sign == -1) {
    for (int m = 1; m <= s; ++m)
      if (s % m == 0) out.factors[m] = 1;
  } else {
    for (int m = 1; m <= 2 * s; ++m)
      if ((2 * s) % m == 0 && s % m != 0) out.factors[m] = 1;
  }
  return out;
}

inline int multiplicative_order(std::int64_t a, std::int64_t p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) throw std::invalid_argument("multiplicative_order: element not invertible");
  std::int64_t x = a;
  int k = 1;
  while (x != 1) {
    x = x * a % p;
    ++k;
  }
  return k;
}

/// The orders that control p-divisibility of generic degrees at q.
struct OrderData {
  int q = 2;
  int p = 5;
  int d = 1;      // order of q mod p
  int e_bcd = 1;  // order of q^2 mod p
  int side = 1;   // +1 if p | q^e_bcd - 1, else -1 (then p | q^e_bcd + 1)

  /// Order of eps*q mod p.
  [[nodiscard]] int e_a(int eps) const { return multiplicative_order(eps * static_cast<std::int64_t>(q), p); }
};

inline std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t mod) {
  std::int64_t out = 1 % mod;
  base %= mod;
  if (base < 0) base += mod;
  while (exp > 0) {
    if (exp & 1) out = out * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return out;
}

inline OrderData order_data(int q, int p) {
  if (!is_prime(p)) throw std::invalid_argument("order_data: p must be prime");
  if (!is_prime_power(q)) throw std::invalid_argument("order_data: q must be a prime power");
  if (q % p == 0) throw std::invalid_argument("order_data: p must not divide q");
  OrderData o;
  o.q = q;
  o.p = p;
  o.d = multiplicative_order(q, p);
  o.e_bcd = multiplicative_order(static_cast<std::int64_t>(q) * q, p);
  const std::int64_t qe = pow_mod(q, o.e_bcd, p);
  if (qe == 1)
    o.side = 1;
  else if (qe == p - 1)
    o.side = -1;
  else
    throw InternalConsistencyError("q^e is neither 1 nor -1 mod p");
  return o;
}

/// p | Phi_m(q) exactly when m = d * p^i for some i >= 0.
inline bool p_divides_phi(int m, const OrderData& ord) {
  if (m < 1) throw std::invalid_argument("p_divides_phi: m must be positive");
  if (m % ord.d != 0) return false;
  int rest = m / ord.d;
  while (rest % ord.p == 0) rest /= ord.p;
  return rest == 1;
}

inline int p_valuation_of_value(const Rational& v, int p) { return valuation(v, p); }

}  // namespace blockdeg
