// Small-integer number theory used across helpkit.

#ifndef HELPKIT_ARITH_HPP_
#define HELPKIT_ARITH_HPP_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace helpkit {

using Integer = mpz_class;
using Rational = mpq_class;

/// Prime factorization as (prime, exponent) pairs in ascending prime order.
inline std::vector<std::pair<long, int>> factorize(long n) {
  if (n < 1)
    throw std::invalid_argument("factorize: argument must be positive");
  std::vector<std::pair<long, int>> out;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p != 0)
      continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1)
    out.emplace_back(n, 1);
  return out;
}

inline std::vector<long> prime_divisors(long n) {
  std::vector<long> out;
  for (auto [p, e] : factorize(n))
    out.push_back(p);
  return out;
}

/// Positive divisors of n in ascending order.
inline std::vector<long> divisors(long n) {
  std::vector<long> out{1};
  for (auto [p, e] : factorize(n)) {
    std::size_t base = out.size();
    long pk = 1;
    for (int i = 0; i < e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j)
        out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline long euler_phi(long n) {
  long r = n;
  for (auto [p, e] : factorize(n))
    r = r / p * (p - 1);
  return r;
}

inline int moebius(long n) {
  int s = 1;
  for (auto [p, e] : factorize(n)) {
    if (e > 1)
      return 0;
    s = -s;
  }
  return s;
}

/// Largest power of p dividing n (the p-part of n).
inline long p_part(long n, long p) {
  long r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

/// Non-negative residue of a modulo m (m > 0).
inline long mod(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

/// Inverse of a modulo m; requires gcd(a, m) = 1.
inline long mod_inverse(long a, long m) {
  if (m == 1)
    return 0;
  long r0 = m, r1 = mod(a, m), s0 = 0, s1 = 1;
  while (r1 != 0) {
    long q = r0 / r1;
    std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
    std::tie(s0, s1) = std::pair{s1, s0 - q * s1};
  }
  if (r0 != 1)
    throw std::invalid_argument("mod_inverse: arguments not coprime");
  return mod(s0, m);
}

/// Ramanujan sum c_m(e): the sum of zeta_m^(j*e) over j coprime to m.
/// Equals the trace of zeta_m^e from Q(zeta_m) down to Q.
inline long ramanujan_sum(long m, long e) {
  long g = std::gcd(mod(e, m), m);
  long q = m / g;
  return moebius(q) * (euler_phi(m) / euler_phi(q));
}

inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Integer ceil_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace helpkit

#endif  // HELPKIT_ARITH_HPP_
