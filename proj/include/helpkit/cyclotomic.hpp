// Exact arithmetic in cyclotomic fields Q(zeta_n).
//
// A value is stored as a sparse coefficient vector over the Zumbroich basis
// of Q(zeta_n), with n the conductor of the value (the least n such that the
// value lies in Q(zeta_n)).  The basis is the one used by GAP: writing
// n = prod p^k and, for an exponent e, a_p = e * (n/p^k)^-1 mod p^k, the root
// zeta_n^e is a basis element iff for every p | n
//
//   p = 2:  a_p < 2^(k-1)
//   p odd:  a_p = j*p^(k-1) + s with j in {1..p-1} and |s| <= (p^(k-1)-1)/2.
//
// Because the basis and the conductor are unique, two values are equal iff
// their stored forms are identical.

#ifndef HELPKIT_CYCLOTOMIC_HPP_
#define HELPKIT_CYCLOTOMIC_HPP_

#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "arith.hpp"

namespace helpkit {

struct NonCoprimeAutomorphism : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

class Cyclotomic {
public:
  using Term = std::pair<long, Rational>;

  Cyclotomic() = default;
  Cyclotomic(long v) : Cyclotomic(Rational(v)) {}  // NOLINT(implicit)
  Cyclotomic(const Rational& q);                   // NOLINT(implicit)

  /// zeta_n^e for any integer e.
  static Cyclotomic zeta(long n, long e = 1);

  /// Value of sum coeffs[e] * zeta_n^e, where coeffs has length n.  The
  /// input may be in any (redundant) power-basis form.
  static Cyclotomic from_power_basis(long n, std::vector<Rational> coeffs);

  /// Value of sum c * zeta_n^e over (e, c); exponents are reduced mod n.
  static Cyclotomic from_terms(long n, std::span<const Term> terms);

  long conductor() const { return conductor_; }
  /// (exponent, coefficient) pairs over the Zumbroich basis of
  /// Q(zeta_conductor), ascending exponent, no zero coefficients.
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  std::optional<Rational> rational() const;
  /// True iff every basis coefficient is an integer, i.e. the value is an
  /// algebraic integer (the Zumbroich basis is an integral basis).
  bool is_integral() const;

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

  friend bool operator==(const Cyclotomic&, const Cyclotomic&) = default;

  std::string to_string() const;

private:
  long conductor_ = 1;
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const Cyclotomic& c);

/// Galois automorphism zeta -> zeta^j.  Throws NonCoprimeAutomorphism when
/// gcd(j, conductor(a)) != 1.
Cyclotomic galois(const Cyclotomic& a, long j);

/// Complex conjugate, galois(a, -1).
inline Cyclotomic conj(const Cyclotomic& a) { return galois(a, -1); }

/// Trace from Q(zeta_conductor(a)) to Q.
Rational trace(const Cyclotomic& a);

/// Trace from Q(zeta_m) to Q; requires conductor(a) | m.
Rational trace(const Cyclotomic& a, long m);

/// Trace from Q(zeta_m) to Q of a * zeta_m^(-l); requires conductor(a) | m.
/// Same value as trace(a * Cyclotomic::zeta(m, -l), m) without forming the
/// product.
Rational trace_shifted(const Cyclotomic& a, long m, long l);

inline std::optional<Rational> is_rational(const Cyclotomic& a) {
  return a.rational();
}

/// True iff zeta_n^e belongs to the Zumbroich basis of Q(zeta_n).
bool is_zumbroich_exponent(long n, long e);

}  // namespace helpkit

#endif  // HELPKIT_CYCLOTOMIC_HPP_
