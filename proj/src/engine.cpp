#include "helpkit/engine.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>
#include <unordered_set>

namespace helpkit {

// ---------------------------------------------------------------------------
// TableSelection

TableSelection TableSelection::parse(std::string_view spec) {
  if (spec == "all")
    return all();
  TableSelection s = ordinary_only();
  std::string item;
  std::istringstream in{std::string(spec)};
  while (std::getline(in, item, ',')) {
    if (item == "ordinary")
      continue;
    if (item.rfind("brauer", 0) == 0 && item.size() > 6) {
      try {
        s.brauer_primes.push_back(std::stol(item.substr(6)));
        continue;
      } catch (const std::exception&) {
      }
    }
    throw std::invalid_argument("unknown table selection item '" + item + "'");
  }
  std::sort(s.brauer_primes.begin(), s.brauer_primes.end());
  s.brauer_primes.erase(
      std::unique(s.brauer_primes.begin(), s.brauer_primes.end()),
      s.brauer_primes.end());
  return s;
}

bool TableSelection::wants(long p) const {
  return all_brauer || std::find(brauer_primes.begin(), brauer_primes.end(),
                                 p) != brauer_primes.end();
}

std::string TableSelection::to_string() const {
  if (all_brauer)
    return "all";
  std::string s = "ordinary";
  for (long p : brauer_primes)
    s += ",brauer" + std::to_string(p);
  return s;
}

// ---------------------------------------------------------------------------
// AugmentationTuple / LinearForm

long AugmentationTuple::sum() const {
  return std::accumulate(values.begin(), values.end(), 0L);
}

long AugmentationTuple::at(std::string_view class_name) const {
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (classes[i] == class_name)
      return values[i];
  return 0;
}

std::size_t AugmentationTuple::nonzero_count() const {
  return std::count_if(values.begin(), values.end(),
                       [](long v) { return v != 0; });
}

Integer LinearForm::numerator(std::span<const long> nu) const {
  Integer s = constant;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    s += coeffs[i] * nu[i];
  return s;
}

// ---------------------------------------------------------------------------

std::vector<std::string> allowed_classes(long k, const TableBundle& b) {
  if (k < 1)
    throw std::invalid_argument("allowed_classes: order must be positive");
  std::vector<std::string> out;
  for (const auto& c : b.classes) {
    if (c.element_order == 1)
      continue;
    bool ok = true;
    for (long p : prime_divisors(c.element_order))
      if (k % p_part(c.element_order, p) != 0)
        ok = false;
    if (ok)
      out.push_back(c.name);
  }
  return out;
}

namespace {

Integer as_integer(const Rational& q, const char* what) {
  if (q.get_den() != 1)
    throw std::domain_error(std::string(what) +
                            " is not integral; character values must be "
                            "algebraic integers");
  return q.get_num();
}

std::int64_t as_int64(const Rational& q, const char* what) {
  Integer v = as_integer(q, what);
  if (!v.fits_slong_p())
    throw std::overflow_error(std::string(what) + " " + v.get_str() +
                              " exceeds 64 bits");
  return v.get_si();
}

Integer from_i128(__int128 v) {
  const bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : v;
  Integer r = static_cast<unsigned long>(u >> 64);
  r <<= 64;
  r += static_cast<unsigned long>(u & ~0UL);
  return neg ? Integer(-r) : r;
}

void check_brauer_coprime(long k, const CharacterTable& t) {
  if (t.kind == TableKind::brauer && k % t.prime == 0)
    throw PreconditionViolation(t.label() + " cannot be used for unit order " +
                                std::to_string(k) + ": " +
                                std::to_string(t.prime) + " divides it");
}

const AugmentationTuple& profile_tuple(const PowerProfile& profile, long m) {
  auto it = profile.tuples.find(m);
  if (it == profile.tuples.end())
    throw MissingProfile("power profile has no tuple for order " +
                         std::to_string(m));
  if (it->second.unit_order != m)
    throw MissingProfile("power profile tuple for order " + std::to_string(m) +
                         " has unit order " +
                         std::to_string(it->second.unit_order));
  return it->second;
}

struct FormKey {
  __int128 constant;
  const std::vector<std::int64_t>* coeffs;
  bool operator==(const FormKey& o) const {
    return constant == o.constant && *coeffs == *o.coeffs;
  }
};

struct FormKeyHash {
  std::size_t operator()(const FormKey& k) const {
    std::size_t h = std::hash<std::int64_t>{}(static_cast<std::int64_t>(k.constant));
    for (std::int64_t a : *k.coeffs)
      h = h * 1000003 ^ std::hash<std::int64_t>{}(a);
    return h;
  }
};

std::vector<long> proper_power_orders(long k) {
  std::vector<long> out;
  for (long m : divisors(k))
    if (m > 1 && m < k)
      out.push_back(m);
  return out;
}

}  // namespace

LinearForm mu_form(long k, long l, const CharacterTable& table,
                   std::size_t character, const PowerProfile& profile,
                   const TableBundle& b) {
  if (k < 2)
    throw std::invalid_argument("mu_form: unit order must be at least 2");
  check_brauer_coprime(k, table);
  const Character& chi = table.characters.at(character);
  const auto unknowns = allowed_classes(k, b);

  LinearForm f;
  f.order = k;
  f.label = {table.label(), chi.name, l};
  f.degree = table.degree(character);

  // d = 1: coefficients of the unknowns.
  const Cyclotomic root = Cyclotomic::zeta(k, -l);
  for (const auto& name : unknowns) {
    const Cyclotomic& v = chi.values[table.class_index(name)];
    f.coeffs.push_back(as_integer(trace(v * root, k), "trace"));
  }

  // 1 < d < k: u^d has order m = k/d and z^d is a primitive m-th root.
  Rational constant = 0;
  for (long m : proper_power_orders(k)) {
    const AugmentationTuple& t = profile_tuple(profile, m);
    Cyclotomic value;
    for (std::size_t i = 0; i < t.classes.size(); ++i)
      if (t.values[i] != 0)
        value += Cyclotomic(t.values[i]) *
                 chi.values[table.class_index(t.classes[i])];
    constant += trace(value * Cyclotomic::zeta(m, -l), m);
  }
  // d = k
  constant += f.degree;
  f.constant = as_integer(constant, "constant term");
  return f;
}

// ---------------------------------------------------------------------------
// SystemBuilder

SystemBuilder::SystemBuilder(const TableBundle& b, long k,
                             const TableSelection& selection)
    : order_(k), unknowns_(allowed_classes(k, b)),
      power_orders_(proper_power_orders(k)) {
  if (k < 2)
    throw std::invalid_argument("unit order must be at least 2");
  for (long m : power_orders_)
    power_classes_.push_back(allowed_classes(m, b));

  std::vector<const CharacterTable*> tables{&b.ordinary};
  for (const auto& t : b.brauer) {
    if (!selection.wants(t.prime))
      continue;
    if (k % t.prime == 0) {
      notices_.push_back(t.label() + " skipped: " + std::to_string(t.prime) +
                         " divides " + std::to_string(k));
      continue;
    }
    tables.push_back(&t);
  }
  if (!selection.all_brauer)
    for (long p : selection.brauer_primes)
      if (!b.brauer_table(p))
        notices_.push_back("brauer" + std::to_string(p) +
                           " requested but not present in the bundle");

  for (const CharacterTable* t : tables) {
    tables_used_.push_back(t->label());
    std::vector<std::size_t> cols;
    for (const auto& name : unknowns_)
      cols.push_back(t->class_index(name));
    for (std::size_t c = 0; c < t->characters.size(); ++c) {
      const Character& chi = t->characters[c];
      CharacterRows r;
      r.table = t->label();
      r.name = chi.name;
      r.degree = t->degree(c);
      r.coeffs.resize(k);
      for (long l = 0; l < k; ++l)
        for (std::size_t col : cols)
          r.coeffs[l].push_back(
              as_int64(trace_shifted(chi.values[col], k, l), "trace"));
      for (std::size_t p = 0; p < power_orders_.size(); ++p) {
        PowerTerm pt;
        pt.m = power_orders_[p];
        for (const auto& name : power_classes_[p]) {
          const Cyclotomic& v = chi.values[t->class_index(name)];
          std::vector<std::int64_t> row;
          for (long l = 0; l < pt.m; ++l)
            row.push_back(as_int64(trace_shifted(v, pt.m, l), "trace"));
          pt.trace.push_back(std::move(row));
        }
        r.powers.push_back(std::move(pt));
      }
      rows_.push_back(std::move(r));
    }
  }
}

std::vector<std::optional<std::vector<long>>> SystemBuilder::resolve(
    const PowerProfile& profile, bool complete) const {
  // Per power order, the tuple aligned with the precomputed class lists.
  std::vector<std::optional<std::vector<long>>> nu;
  for (std::size_t p = 0; p < power_orders_.size(); ++p) {
    const long m = power_orders_[p];
    if (!complete && !profile.tuples.contains(m)) {
      nu.emplace_back();
      continue;
    }
    const AugmentationTuple& t = profile_tuple(profile, m);
    const auto& allowed = power_classes_[p];
    for (std::size_t i = 0; i < t.classes.size(); ++i)
      if (t.values[i] != 0 &&
          std::find(allowed.begin(), allowed.end(), t.classes[i]) ==
              allowed.end())
        throw MissingProfile("power profile tuple for order " +
                             std::to_string(m) + " is supported on class " +
                             t.classes[i]);
    std::vector<long> aligned;
    for (const auto& name : allowed)
      aligned.push_back(t.at(name));
    nu.push_back(std::move(aligned));
  }
  return nu;
}

ConstraintSystem SystemBuilder::assemble(
    const std::vector<std::optional<std::vector<long>>>& nu,
    bool dedup) const {
  std::unordered_set<FormKey, FormKeyHash> seen;
  ConstraintSystem s;
  s.order = order_;
  s.unknowns = unknowns_;
  s.tables_used = tables_used_;
  s.notices = notices_;
  for (const auto& r : rows_) {
    if (!r.degree.fits_slong_p())
      throw std::overflow_error("character degree exceeds 64 bits");
    const __int128 degree = r.degree.get_si();
    for (long l = 0; l < order_; ++l) {
      __int128 constant = degree;
      bool fixed = true;
      for (std::size_t p = 0; p < r.powers.size() && fixed; ++p) {
        const PowerTerm& pt = r.powers[p];
        const long lm = l % pt.m;
        if (nu[p]) {
          for (std::size_t c = 0; c < pt.trace.size(); ++c)
            constant += static_cast<__int128>(pt.trace[c][lm]) * (*nu[p])[c];
          continue;
        }
        for (const auto& tr : pt.trace)
          fixed = fixed && tr[lm] == pt.trace.front()[lm];
        // tuples sum to 1, so a constant column contributes its value
        if (fixed && !pt.trace.empty())
          constant += pt.trace.front()[lm];
      }
      if (!fixed)
        continue;
      if (dedup && !seen.insert({constant, &r.coeffs[l]}).second)
        continue;
      LinearForm f;
      f.order = order_;
      f.degree = r.degree;
      f.label = {r.table, r.name, l};
      f.constant = from_i128(constant);
      for (std::int64_t a : r.coeffs[l])
        f.coeffs.emplace_back(static_cast<long>(a));
      s.forms.push_back(std::move(f));
    }
  }
  return s;
}

ConstraintSystem SystemBuilder::build(const PowerProfile& profile,
                                      bool dedup) const {
  return assemble(resolve(profile, true), dedup);
}

ConstraintSystem SystemBuilder::build_partial(
    const PowerProfile& profile) const {
  return assemble(resolve(profile, false), true);
}

ConstraintSystem SystemBuilder::build_common() const {
  return build_partial({order_, {}});
}

ConstraintSystem build_system(long k, const PowerProfile& profile,
                              const TableBundle& b,
                              const TableSelection& selection, bool dedup) {
  return SystemBuilder(b, k, selection).build(profile, dedup);
}

}  // namespace helpkit
