#include "helpkit/solver.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <tuple>

#include "helpkit/lp.hpp"

namespace helpkit {

namespace {

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v)
    s += (s.empty() ? "" : ", ") + x;
  return s;
}

// A form after eliminating the last unknown: N = c + a.x, x the first n-1
// unknowns.
struct Reduced {
  Integer c;
  std::vector<Integer> a;
  bool operator==(const Reduced&) const = default;
  bool operator<(const Reduced& o) const {
    return std::tie(c, a) < std::tie(o.c, o.a);
  }
};

struct Reduction {
  long order = 0;
  std::size_t free = 0;
  std::vector<Reduced> rows;
  bool infeasible = false;  // some constant row already fails
};

Reduction reduce(const ConstraintSystem& s) {
  Reduction r;
  r.order = s.order;
  const std::size_t n = s.unknowns.size();
  if (n == 0) {
    r.infeasible = true;
    return r;
  }
  r.free = n - 1;
  std::vector<Reduced> rows;
  for (const auto& f : s.forms) {
    Reduced x;
    x.c = f.constant + f.coeffs[n - 1];
    for (std::size_t i = 0; i + 1 < n; ++i)
      x.a.push_back(f.coeffs[i] - f.coeffs[n - 1]);
    rows.push_back(std::move(x));
  }
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  r.rows = std::move(rows);
  return r;
}

// Cuts dir.x >= rhs, one per primitive direction, carrying both the
// non-negativity and the divisibility of N.
struct Cuts {
  std::map<std::vector<Integer>, Integer> ge;
  bool infeasible = false;
};

Cuts make_cuts(const Reduction& red) {
  Cuts out;
  out.infeasible = red.infeasible;
  const Integer k = red.order;
  for (const auto& row : red.rows) {
    Integer g = 0;
    for (const auto& a : row.a)
      g = gcd(g, a);
    if (g == 0) {
      if (row.c < 0 || !mpz_divisible_p(row.c.get_mpz_t(), k.get_mpz_t()))
        out.infeasible = true;
      continue;
    }
    // N ranges over c + gZ; it must also lie in kZ and be >= 0.
    Integer d = gcd(k, g);
    if (!mpz_divisible_p(row.c.get_mpz_t(), d.get_mpz_t())) {
      out.infeasible = true;
      continue;
    }
    Integer gd = g / d, kd = k / d, t = 0;
    if (gd > 1) {
      Integer inv;
      mpz_invert(inv.get_mpz_t(), kd.get_mpz_t(), gd.get_mpz_t());
      t = Integer(row.c / d) * inv;
      mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), gd.get_mpz_t());
    }
    Integer lcm = k * gd;
    Integer n0 = k * t;
    mpz_fdiv_r(n0.get_mpz_t(), n0.get_mpz_t(), lcm.get_mpz_t());
    std::vector<Integer> dir;
    for (const auto& a : row.a)
      dir.push_back(a / g);
    Integer rhs = (n0 - row.c) / g;
    auto [it, fresh] = out.ge.emplace(std::move(dir), rhs);
    if (!fresh && it->second < rhs)
      it->second = rhs;
  }
  return out;
}

struct Relaxation {
  std::vector<std::vector<Rational>> A;
  std::vector<Rational> b;

  explicit Relaxation(const Cuts& cuts) {
    for (const auto& [dir, rhs] : cuts.ge) {
      std::vector<Rational> row;
      for (const auto& a : dir)
        row.emplace_back(-a);
      A.push_back(std::move(row));
      b.emplace_back(-rhs);
    }
  }

  lp::Result<Rational> max(const std::vector<Rational>& c) const {
    return lp::maximize(A, b, c);
  }
  bool feasible(std::size_t n) const {
    return max(std::vector<Rational>(n)).outcome == lp::Outcome::optimal;
  }
};

Integer floor_q(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil_q(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

// Bounds of the free unknowns only (when with_last is false) or of all.
Box box_of(const ConstraintSystem& s, const Reduction& red, bool with_last) {
  Box box;
  box.unknowns = s.unknowns;
  const std::size_t n = red.free;
  Cuts cuts = make_cuts(red);
  if (cuts.infeasible) {
    box.empty = true;
    return box;
  }
  if (n == 0) {
    box.bounds.push_back({1, 1});
    return box;
  }
  Relaxation rel(cuts);

  std::vector<std::string> unbounded;
  std::optional<bool> feasible;
  // Returns the optimum of c.x, or nullopt when unbounded.
  auto optimum = [&](const std::vector<Rational>& c,
                     const std::string& name) -> std::optional<Rational> {
    auto res = rel.max(c);
    if (res.outcome == lp::Outcome::optimal)
      return res.value;
    if (res.outcome == lp::Outcome::primal_infeasible)
      feasible = false;
    else {
      if (!feasible)
        feasible = rel.feasible(n);
      if (*feasible &&
          std::find(unbounded.begin(), unbounded.end(), name) ==
              unbounded.end())
        unbounded.push_back(name);
    }
    return std::nullopt;
  };

  const std::size_t count = with_last ? n + 1 : n;
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<Rational> up(n), down(n);
    if (i < n) {
      up[i] = 1;
      down[i] = -1;
    } else {
      std::fill(up.begin(), up.end(), Rational(-1));
      std::fill(down.begin(), down.end(), Rational(1));
    }
    auto hi = optimum(up, s.unknowns[i]);
    if (feasible == false) {
      box.empty = true;
      box.bounds.clear();
      return box;
    }
    auto lo = optimum(down, s.unknowns[i]);
    if (feasible == false) {
      box.empty = true;
      box.bounds.clear();
      return box;
    }
    if (!hi || !lo) {
      box.bounds.push_back({0, 0});
      continue;
    }
    Interval iv;
    if (i < n) {
      iv = {ceil_q(-*lo), floor_q(*hi)};
    } else {
      iv = {ceil_q(1 - *lo), floor_q(1 + *hi)};
    }
    if (iv.lo > iv.hi) {
      box.empty = true;
      box.bounds.clear();
      return box;
    }
    box.bounds.push_back(iv);
  }
  if (!unbounded.empty())
    throw Unbounded(unbounded);
  return box;
}

using i128 = __int128;

std::int64_t to_i64(const Integer& v) {
  if (!v.fits_slong_p())
    throw SearchLimitExceeded("value " + v.get_str() +
                              " exceeds the 64-bit search range");
  return v.get_si();
}

std::int64_t floor_div64(i128 a, i128 b) {
  i128 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0)))
    --q;
  return static_cast<std::int64_t>(q);
}

std::int64_t ceil_div64(i128 a, i128 b) { return -floor_div64(-a, b); }

std::int64_t emod(i128 a, std::int64_t m) {
  i128 r = a % m;
  return static_cast<std::int64_t>(r < 0 ? r + m : r);
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
}

// Inverse of a modulo m for coprime a, m (m >= 1).
std::int64_t inverse64(std::int64_t a, std::int64_t m) {
  if (m == 1)
    return 0;
  std::int64_t t = 0, nt = 1, r = m, nr = emod(a, m);
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::tie(t, nt) = std::make_pair(nt, t - q * nt);
    std::tie(r, nr) = std::make_pair(nr, r - q * nr);
  }
  return emod(t, m);
}

// Combine x = r1 (mod m1) with x = r2 (mod m2).  False when inconsistent.
bool crt(std::int64_t& r1, std::int64_t& m1, std::int64_t r2,
         std::int64_t m2) {
  std::int64_t g = gcd64(m1, m2);
  if ((r2 - r1) % g != 0)
    return false;
  std::int64_t m2g = m2 / g;
  i128 step = static_cast<i128>((r2 - r1) / g) * inverse64(m1 / g, m2g);
  std::int64_t t = emod(step, m2g);
  std::int64_t m = m1 * m2g;
  r1 = emod(static_cast<i128>(r1) + static_cast<i128>(m1) * t, m);
  m1 = m;
  return true;
}

class Search {
public:
  Search(const ConstraintSystem& s, const Reduction& red, const Box& box,
         const SolveOptions& opt)
      : s_(s), k_(red.order), n_(red.free), limit_(opt.node_limit) {
    for (std::size_t i = 0; i < n_; ++i) {
      lo_.push_back(to_i64(box.bounds[i].lo));
      hi_.push_back(to_i64(box.bounds[i].hi));
    }
    for (const auto& r : red.rows) {
      Row row;
      row.c = to_i64(r.c);
      for (const auto& a : r.a)
        row.a.push_back(to_i64(a));
      row.suffix_max.assign(n_ + 1, 0);
      row.suffix_gcd.assign(n_ + 1, k_);
      for (std::size_t i = n_; i-- > 0;) {
        i128 a = row.a[i];
        row.suffix_max[i] =
            row.suffix_max[i + 1] + std::max(a * lo_[i], a * hi_[i]);
        row.suffix_gcd[i] = gcd64(row.suffix_gcd[i + 1], row.a[i]);
      }
      rows_.push_back(std::move(row));
    }
  }

  std::vector<std::vector<long>> run() {
    std::vector<i128> partial;
    for (const auto& r : rows_)
      partial.push_back(r.c);
    x_.assign(n_, 0);
    if (n_ == 0)
      accept();
    else
      descend(0, partial);
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

private:
  struct Row {
    std::int64_t c;
    std::vector<std::int64_t> a;
    std::vector<i128> suffix_max;            // best case of a_j x_j, j >= i
    std::vector<std::int64_t> suffix_gcd;    // gcd(k, a_j for j >= i)
  };

  void tick() {
    if (++nodes_ > limit_)
      throw SearchLimitExceeded("search exceeded " + std::to_string(limit_) +
                                " nodes for order " + std::to_string(k_));
  }

  void accept() {
    std::vector<long> nu(x_.begin(), x_.end());
    long last = 1;
    for (long v : nu)
      last -= v;
    nu.push_back(last);
    if (satisfies(s_, nu))
      found_.push_back(std::move(nu));
  }

  void descend(std::size_t i, const std::vector<i128>& partial) {
    if (i + 1 == n_) {
      last_level(i, partial);
      return;
    }
    std::vector<i128> next(partial.size());
    for (std::int64_t x = lo_[i]; x <= hi_[i]; ++x) {
      tick();
      bool ok = true;
      for (std::size_t r = 0; r < rows_.size() && ok; ++r) {
        const Row& row = rows_[r];
        next[r] = partial[r] + static_cast<i128>(row.a[i]) * x;
        if (next[r] + row.suffix_max[i + 1] < 0)
          ok = false;
        else if (emod(next[r], row.suffix_gcd[i + 1]) != 0)
          ok = false;
      }
      if (!ok)
        continue;
      x_[i] = x;
      descend(i + 1, next);
    }
  }

  void last_level(std::size_t i, const std::vector<i128>& partial) {
    i128 lo = lo_[i], hi = hi_[i];
    std::int64_t res = 0, mod = 1;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const std::int64_t a = rows_[r].a[i];
      const i128 p = partial[r];
      if (a == 0) {
        if (p < 0 || emod(p, k_) != 0)
          return;
        continue;
      }
      if (a > 0)
        lo = std::max<i128>(lo, ceil_div64(-p, a));
      else
        hi = std::min<i128>(hi, floor_div64(p, -a));
      if (lo > hi)
        return;
      // a x = -p (mod k)
      std::int64_t d = gcd64(a, k_);
      if (emod(-p, d) != 0)
        return;
      std::int64_t m = k_ / d;
      std::int64_t r0 =
          emod(static_cast<i128>(emod(-p, k_) / d) * inverse64(a / d, m), m);
      if (!crt(res, mod, r0, m))
        return;
    }
    i128 first = lo + emod(static_cast<i128>(res) - lo, mod);
    for (i128 x = first; x <= hi; x += mod) {
      tick();
      x_[i] = static_cast<std::int64_t>(x);
      accept();
    }
  }

  const ConstraintSystem& s_;
  const std::int64_t k_;
  const std::size_t n_;
  const std::uint64_t limit_;
  std::uint64_t nodes_ = 0;
  std::vector<std::int64_t> lo_, hi_, x_;
  std::vector<Row> rows_;
  std::vector<std::vector<long>> found_;
};

}  // namespace

Unbounded::Unbounded(std::vector<std::string> names)
    : std::runtime_error("relaxation does not bound " + join(names)),
      unknowns(std::move(names)) {}

const Interval& Box::at(std::string_view name) const {
  for (std::size_t i = 0; i < unknowns.size(); ++i)
    if (unknowns[i] == name)
      return bounds.at(i);
  throw std::out_of_range("box has no unknown " + std::string(name));
}

Integer Box::volume() const {
  if (empty)
    return 0;
  Integer v = 1;
  for (const auto& b : bounds)
    v *= b.hi - b.lo + 1;
  return v;
}

Box derive_box(const ConstraintSystem& s) {
  return box_of(s, reduce(s), true);
}

bool satisfies(const ConstraintSystem& s, std::span<const long> nu) {
  if (nu.size() != s.unknowns.size())
    return false;
  long sum = 0;
  for (long v : nu)
    sum += v;
  if (sum != 1)
    return false;
  const Integer k = s.order;
  for (const auto& f : s.forms) {
    Integer v = f.numerator(nu);
    if (v < 0 || !mpz_divisible_p(v.get_mpz_t(), k.get_mpz_t()))
      return false;
  }
  return true;
}

SolutionSet enumerate(const ConstraintSystem& s, const SolveOptions& opt) {
  SolutionSet out;
  out.order = s.order;
  out.unknowns = s.unknowns;
  const Reduction red = reduce(s);
  const Box box = box_of(s, red, false);
  if (box.empty)
    return out;
  for (auto& nu : Search(s, red, box, opt).run()) {
    AugmentationTuple t;
    t.unit_order = s.order;
    t.classes = s.unknowns;
    t.values = std::move(nu);
    out.solutions.push_back(std::move(t));
  }
  return out;
}

}  // namespace helpkit
