// Luthar-Passi constraint generation.
//
// For a torsion unit u of order k, a character chi and an integer l,
//
//   mu_l(u, chi) = 1/k * sum_{d | k} Tr_{Q(z^d)/Q}( chi(u^d) * z^(-d*l) )
//
// is a non-negative integer (z a primitive k-th root of unity; for a
// p-Brauer character p must not divide k).  The d = 1 term is linear in the
// unknown partial augmentations of u, the d = k term is chi(1), and every
// other term is fixed once the partial augmentations of the proper powers
// u^d are fixed by a PowerProfile.

#ifndef HELPKIT_ENGINE_HPP_
#define HELPKIT_ENGINE_HPP_

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tables.hpp"

namespace helpkit {

struct PreconditionViolation : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct MissingProfile : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Which character tables feed the constraint system.  The ordinary table
/// is always used.
struct TableSelection {
  bool all_brauer = true;
  std::vector<long> brauer_primes;  // consulted when !all_brauer

  static TableSelection ordinary_only() { return {false, {}}; }
  static TableSelection all() { return {true, {}}; }
  /// "ordinary", "all", or a comma list such as "ordinary,brauer3,brauer5".
  static TableSelection parse(std::string_view spec);

  bool wants(long p) const;
  std::string to_string() const;
  auto operator<=>(const TableSelection&) const = default;
};

/// Partial augmentations of a unit of order unit_order, one entry per class
/// in allowed_classes(unit_order).
struct AugmentationTuple {
  long unit_order = 0;
  std::vector<std::string> classes;
  std::vector<long> values;

  long sum() const;
  /// Partial augmentation at a class; zero for classes outside the support.
  long at(std::string_view class_name) const;
  std::size_t nonzero_count() const;
  auto operator<=>(const AugmentationTuple&) const = default;
};

/// Tuples for u^(k/m), keyed by their order m.
using PowerFamily = std::map<long, AugmentationTuple>;

struct PowerProfile {
  long unit_order = 0;
  PowerFamily tuples;  // every m | k with 1 < m < k
  auto operator<=>(const PowerProfile&) const = default;
};

struct FormLabel {
  std::string table;  // "ordinary", "brauer3", ...
  std::string character;
  long l = 0;
  auto operator<=>(const FormLabel&) const = default;
};

/// mu_l = (constant + sum coeffs[i] * nu[i]) / order, over the unknowns of
/// the owning system.
struct LinearForm {
  long order = 0;
  Integer constant;
  std::vector<Integer> coeffs;
  Integer degree;  // chi(1); 0 <= mu_l <= chi(1)
  FormLabel label;

  Integer numerator(std::span<const long> nu) const;
  bool same_constraint(const LinearForm& o) const {
    return order == o.order && constant == o.constant && coeffs == o.coeffs;
  }
};

struct ConstraintSystem {
  long order = 0;
  std::vector<std::string> unknowns;  // sum of unknowns = 1
  std::vector<LinearForm> forms;
  std::vector<std::string> tables_used;
  std::vector<std::string> notices;
};

/// Classes that can carry a nonzero partial augmentation for a unit of
/// order k: nontrivial classes whose p-parts of the element order divide the
/// p-parts of k for every prime p.
std::vector<std::string> allowed_classes(long k, const TableBundle& b);

LinearForm mu_form(long k, long l, const CharacterTable& table,
                   std::size_t character, const PowerProfile& profile,
                   const TableBundle& b);

ConstraintSystem build_system(long k, const PowerProfile& profile,
                              const TableBundle& b,
                              const TableSelection& selection,
                              bool dedup = true);

/// Precomputes every trace needed for unit order k so that systems for many
/// profiles can be assembled by integer dot products.
class SystemBuilder {
public:
  SystemBuilder(const TableBundle& b, long k, const TableSelection& selection);

  long order() const { return order_; }
  const std::vector<std::string>& unknowns() const { return unknowns_; }
  const std::vector<std::string>& tables_used() const { return tables_used_; }
  const std::vector<std::string>& notices() const { return notices_; }
  /// Proper divisors m of k with 1 < m < k, ascending.
  const std::vector<long>& power_orders() const { return power_orders_; }

  ConstraintSystem build(const PowerProfile& profile, bool dedup = true) const;

  /// The forms whose value does not depend on the profile at all (every
  /// power term is constant across the classes of that power).  Their
  /// solutions contain the solutions of build(p) for every profile p.
  ConstraintSystem build_common() const;

  /// Like build_common, but the power orders present in profile take their
  /// tuples from it.  A subsystem of build(p) for every p that agrees with
  /// profile on those orders.
  ConstraintSystem build_partial(const PowerProfile& profile) const;

private:
  std::vector<std::optional<std::vector<long>>> resolve(
      const PowerProfile& profile, bool complete) const;
  ConstraintSystem assemble(
      const std::vector<std::optional<std::vector<long>>>& nu,
      bool dedup) const;

  struct PowerTerm {
    long m;
    std::vector<std::vector<std::int64_t>> trace;  // [class][l mod m]
  };
  struct CharacterRows {
    std::string table;
    std::string name;
    Integer degree;
    std::vector<std::vector<std::int64_t>> coeffs;  // [l][unknown]
    std::vector<PowerTerm> powers;
  };

  long order_;
  std::vector<std::string> unknowns_;
  std::vector<long> power_orders_;
  std::vector<std::vector<std::string>> power_classes_;  // allowed_classes(m)
  std::vector<CharacterRows> rows_;
  std::vector<std::string> tables_used_;
  std::vector<std::string> notices_;
};

}  // namespace helpkit

#endif  // HELPKIT_ENGINE_HPP_
