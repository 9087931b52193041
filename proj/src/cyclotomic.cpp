#include "helpkit/cyclotomic.hpp"

#include <numeric>
#include <sstream>

namespace helpkit {

namespace {

// Zumbroich digit test for one prime power p^k || n, given a = a_p(e).
bool basis_digit(long p, long pk, long a) {
  long top = pk / p;
  if (p == 2)
    return a < top;
  long h = (top - 1) / 2;
  return mod(a + h, pk) / top != 0;
}

struct Dense {
  long n;
  std::vector<Rational> c;
};

// Q(zeta_n) = Q(zeta_{n/2}) when n = 2 mod 4; keep a 2-part of 4 instead so
// the digit rules apply uniformly.
void lift_twice_odd(Dense& d) {
  if (d.n % 4 != 2)
    return;
  std::vector<Rational> c(2 * d.n);
  for (long e = 0; e < d.n; ++e)
    if (d.c[e] != 0)
      c[2 * e] = std::move(d.c[e]);
  d.n *= 2;
  d.c = std::move(c);
}

void reduce_to_basis(Dense& d) {
  const long n = d.n;
  for (auto [p, k] : factorize(n)) {
    long pk = 1;
    for (int i = 0; i < k; ++i)
      pk *= p;
    const long inv = mod_inverse((n / pk) % pk, pk);
    const long step = n / p;
    for (long e = 0; e < n; ++e) {
      if (d.c[e] == 0 || basis_digit(p, pk, (e % pk) * inv % pk))
        continue;
      Rational coef = d.c[e];
      d.c[e] = 0;
      if (p == 2) {
        d.c[(e + step) % n] -= coef;
      } else {
        for (long i = 1; i < p; ++i)
          d.c[(e + i * step) % n] -= coef;
      }
    }
  }
}

bool shrink_by_divisor(Dense& d, long q) {
  for (long e = 0; e < d.n; ++e)
    if (d.c[e] != 0 && e % q != 0)
      return false;
  std::vector<Rational> c(d.n / q);
  for (long e = 0; e < d.n; e += q)
    c[e / q] = std::move(d.c[e]);
  d.n /= q;
  d.c = std::move(c);
  return true;
}

// p || n, p odd.  The value lies in Q(zeta_{n/p}) iff, within every coset
// e + (n/p)Z, the p-1 basis coefficients agree.
bool shrink_by_simple_prime(Dense& d, long p) {
  const long np = d.n / p;
  std::vector<Rational> out(np);
  for (long key = 0; key < np; ++key) {
    const Rational* common = nullptr;
    for (long i = 0; i < p; ++i) {
      long e = key + i * np;
      if (e % p == 0)
        continue;
      if (common == nullptr)
        common = &d.c[e];
      else if (d.c[e] != *common)
        return false;
    }
    if (*common != 0)
      out[mod(key * mod_inverse(p % np, np), np)] = -*common;
  }
  d.n = np;
  d.c = std::move(out);
  return true;
}

void reduce_conductor(Dense& d) {
  bool changed = true;
  while (changed && d.n > 1) {
    changed = false;
    for (auto [p, k] : factorize(d.n)) {
      if (p == 2)
        changed = shrink_by_divisor(d, k == 2 ? 4 : 2);
      else if (k >= 2)
        changed = shrink_by_divisor(d, p);
      else
        changed = shrink_by_simple_prime(d, p);
      if (changed)
        break;
    }
  }
}

Dense embed(const Cyclotomic& a, long n) {
  Dense d{n, std::vector<Rational>(n)};
  const long scale = n / a.conductor();
  for (const auto& [e, c] : a.terms())
    d.c[e * scale] += c;
  return d;
}

}  // namespace

Cyclotomic Cyclotomic::from_power_basis(long n, std::vector<Rational> coeffs) {
  if (n < 1)
    throw std::invalid_argument("cyclotomic conductor must be positive");
  if (static_cast<long>(coeffs.size()) != n)
    throw std::invalid_argument("power-basis vector length must equal n");
  for (auto& c : coeffs)
    c.canonicalize();
  Dense d{n, std::move(coeffs)};
  lift_twice_odd(d);
  reduce_to_basis(d);
  reduce_conductor(d);
  Cyclotomic out;
  out.conductor_ = d.n;
  for (long e = 0; e < d.n; ++e)
    if (d.c[e] != 0)
      out.terms_.emplace_back(e, std::move(d.c[e]));
  return out;
}

Cyclotomic::Cyclotomic(const Rational& q) {
  if (q != 0) {
    terms_.emplace_back(0, q);
    terms_.back().second.canonicalize();
  }
}

Cyclotomic Cyclotomic::zeta(long n, long e) {
  if (n < 1)
    throw std::invalid_argument("zeta: n must be positive");
  std::vector<Rational> c(n);
  c[mod(e, n)] = 1;
  return from_power_basis(n, std::move(c));
}

Cyclotomic Cyclotomic::from_terms(long n, std::span<const Term> terms) {
  if (n < 1)
    throw std::invalid_argument("cyclotomic conductor must be positive");
  std::vector<Rational> c(n);
  for (const auto& [e, v] : terms)
    c[mod(e, n)] += v;
  return from_power_basis(n, std::move(c));
}

std::optional<Rational> Cyclotomic::rational() const {
  if (conductor_ != 1)
    return std::nullopt;
  return terms_.empty() ? Rational(0) : terms_.front().second;
}

bool Cyclotomic::is_integral() const {
  for (const auto& [e, c] : terms_)
    if (c.get_den() != 1)
      return false;
  return true;
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  if (b.is_zero())
    return a;
  if (a.is_zero())
    return b;
  const long n = std::lcm(a.conductor(), b.conductor());
  Dense d = embed(a, n);
  const long scale = n / b.conductor();
  for (const auto& [e, c] : b.terms())
    d.c[e * scale] += c;
  return Cyclotomic::from_power_basis(n, std::move(d.c));
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
  return a + (-b);
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& [e, c] : out.terms_)
    c = -c;
  return out;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.is_zero() || b.is_zero())
    return {};
  const long n = std::lcm(a.conductor(), b.conductor());
  const long sa = n / a.conductor(), sb = n / b.conductor();
  std::vector<Rational> c(n);
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms())
      c[(ea * sa + eb * sb) % n] += ca * cb;
  return Cyclotomic::from_power_basis(n, std::move(c));
}

std::string Cyclotomic::to_string() const {
  if (auto q = rational())
    return q->get_str();
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational mag = abs(c);
    if (c < 0)
      os << "-";
    else if (!first)
      os << "+";
    if (mag != 1)
      os << mag.get_str() << "*";
    os << "E(" << conductor_ << ")";
    if (e != 1)
      os << "^" << e;
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& c) {
  return os << c.to_string();
}

Cyclotomic galois(const Cyclotomic& a, long j) {
  const long n = a.conductor();
  if (std::gcd(mod(j, n), n) != 1)
    throw NonCoprimeAutomorphism("galois: exponent " + std::to_string(j) +
                                 " not coprime to conductor " +
                                 std::to_string(n));
  if (n == 1)
    return a;
  std::vector<Rational> c(n);
  for (const auto& [e, v] : a.terms())
    c[mod(e * mod(j, n), n)] += v;
  return Cyclotomic::from_power_basis(n, std::move(c));
}

Rational trace(const Cyclotomic& a) { return trace(a, a.conductor()); }

Rational trace(const Cyclotomic& a, long m) { return trace_shifted(a, m, 0); }

Rational trace_shifted(const Cyclotomic& a, long m, long l) {
  if (m < 1 || m % a.conductor() != 0)
    throw std::invalid_argument("trace: field Q(zeta_" + std::to_string(m) +
                                ") does not contain the value");
  const long scale = m / a.conductor();
  Rational t = 0;
  for (const auto& [e, c] : a.terms())
    t += c * ramanujan_sum(m, e * scale - l);
  return t;
}

bool is_zumbroich_exponent(long n, long e) {
  if (n % 4 == 2)
    return false;
  e = mod(e, n);
  for (auto [p, k] : factorize(n)) {
    long pk = 1;
    for (int i = 0; i < k; ++i)
      pk *= p;
    long inv = mod_inverse((n / pk) % pk, pk);
    if (!basis_digit(p, pk, (e % pk) * inv % pk))
      return false;
  }
  return true;
}

}  // namespace helpkit
