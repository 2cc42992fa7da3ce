#pragma once

#include "blockdeg/numeric.hpp"
#include "blockdeg/partition.hpp"

namespace blockdeg {

inline BigInt hook_product(const Partition& lambda) {
  BigInt out = 1;
  for (int h : hook_lengths(lambda)) out *= h;
  return out;
}

/// chi^lambda(1) = n! / prod(hooks), by the hook length formula.
inline BigInt degree(const Partition& lambda) {
  const BigInt numerator = factorial(lambda.size());
  const BigInt hooks = hook_product(lambda);
  if (numerator % hooks != 0)
    throw InternalConsistencyError("hook product of (" + lambda.str() + ") does not divide n!");
  return numerator / hooks;
}

/// v_p(chi^lambda(1)) from Legendre's formula minus the valuation of the hooks.
inline int p_valuation_of_degree(const Partition& lambda, int p) {
  int v = factorial_valuation(lambda.size(), p);
  for (int h : hook_lengths(lambda))
    for (int x = h; x % p == 0; x /= p) --v;
  if (v < 0) throw InternalConsistencyError("negative degree valuation for (" + lambda.str() + ")");
  return v;
}

/// p'-degree test by the last-layer recursion: with n = sum a_j p^j and k the
/// top digit index, lambda is p' iff exactly a_k hooks are divisible by p^k
/// and the p^k-core (a partition of n - a_k p^k) is again p'.
inline bool is_p_prime_macdonald(const Partition& lambda, int p) {
  const int n = lambda.size();
  if (n < p) return true;
  const PAdicDigits digits = p_adic_digits(n, p);
  const int k = digits.top_index();
  int pk = 1;
  for (int i = 0; i < k; ++i) pk *= p;
  const int ak = digits.digit(k);
  if (count_hooks_divisible(lambda, pk) != ak) return false;
  return is_p_prime_macdonald(p_core(lambda, pk), p);
}

}  // namespace blockdeg
