#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace blockdeg {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Raised when an exact computation contradicts a mathematical identity
/// (e.g. a hook product that does not divide n!). Maps to CLI exit code 3.
class InternalConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline BigInt factorial(int n) {
  BigInt out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

inline std::string to_string(const BigInt& v) { return v.str(); }

inline std::string to_string(const Rational& v) {
  const BigInt num = boost::multiprecision::numerator(v);
  const BigInt den = boost::multiprecision::denominator(v);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<int> primes_in(int lo, int hi) {
  std::vector<int> out;
  for (int v = lo; v <= hi; ++v)
    if (is_prime(v)) out.push_back(v);
  return out;
}

/// Exponent of p in |n|; n must be nonzero.
inline int valuation(std::int64_t n, std::int64_t p) {
  if (n == 0) throw std::invalid_argument("valuation of zero");
  if (n < 0) n = -n;
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

inline int valuation(BigInt n, const BigInt& p) {
  if (n == 0) throw std::invalid_argument("valuation of zero");
  if (n < 0) n = -n;
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

/// Legendre: exponent of p in n!.
inline int factorial_valuation(int n, int p) {
  int v = 0;
  for (std::int64_t pk = p; pk <= n; pk *= p) v += static_cast<int>(n / pk);
  return v;
}

/// Exponent of p in a nonzero rational.
inline int valuation(const Rational& v, std::int64_t p) {
  if (v == 0) throw std::invalid_argument("p-valuation of zero");
  const BigInt bp = p;
  return valuation(BigInt(boost::multiprecision::numerator(v)), bp) -
         valuation(BigInt(boost::multiprecision::denominator(v)), bp);
}

/// If q = l^f for a prime l, returns l; otherwise 0.
inline std::int64_t prime_power_base(std::int64_t q) {
  if (q < 2) return 0;
  std::int64_t l = 0;
  for (std::int64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      l = d;
      break;
    }
  }
  if (l == 0) return q;
  while (q % l == 0) q /= l;
  return q == 1 ? l : 0;
}

inline bool is_prime_power(std::int64_t q) { return prime_power_base(q) != 0; }

inline std::vector<int> prime_powers_in(int lo, int hi) {
  std::vector<int> out;
  for (int v = lo; v <= hi; ++v)
    if (is_prime_power(v)) out.push_back(v);
  return out;
}

/// Removes every factor of the prime l from a nonzero rational and returns
/// the absolute value of what is left.
inline Rational strip_prime(const Rational& v, std::int64_t l) {
  BigInt num = boost::multiprecision::abs(BigInt(boost::multiprecision::numerator(v)));
  BigInt den = boost::multiprecision::denominator(v);
  const BigInt bl = l;
  if (num == 0) return Rational(0);
  while (num % bl == 0) num /= bl;
  while (den % bl == 0) den /= bl;
  return Rational(num, den);
}

inline Rational pow(const Rational& base, int exp) {
  Rational out = 1;
  Rational b = exp < 0 ? Rational(1) / base : base;
  unsigned e = static_cast<unsigned>(exp < 0 ? -exp : exp);
  while (e) {
    if (e & 1U) out *= b;
    b *= b;
    e >>= 1U;
  }
  return out;
}

}  // namespace blockdeg
