// Integer solutions of a constraint system: every form k*mu_l must be a
// non-negative multiple of k and the unknowns sum to 1.

#ifndef HELPKIT_SOLVER_HPP_
#define HELPKIT_SOLVER_HPP_

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "engine.hpp"

namespace helpkit {

struct Unbounded : std::runtime_error {
  explicit Unbounded(std::vector<std::string> names);
  std::vector<std::string> unknowns;
};

struct SearchLimitExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Interval {
  Integer lo, hi;
  bool operator==(const Interval&) const = default;
};

struct Box {
  std::vector<std::string> unknowns;
  std::vector<Interval> bounds;  // aligned with unknowns
  bool empty = false;            // the relaxation itself is infeasible

  const Interval& at(std::string_view name) const;
  Integer volume() const;
};

struct SolutionSet {
  long order = 0;
  std::vector<std::string> unknowns;
  std::vector<AugmentationTuple> solutions;  // lexicographic in unknowns
};

struct SolveOptions {
  std::uint64_t node_limit = 50'000'000;
};

/// Bounds every unknown by the LP relaxation of the system (with the
/// divisibility of each form folded into its right-hand side), then rounds
/// inward.  Throws Unbounded naming the unknowns the relaxation leaves free.
Box derive_box(const ConstraintSystem& s);

SolutionSet enumerate(const ConstraintSystem& s, const SolveOptions& opt = {});

/// Direct check of one assignment (aligned with s.unknowns).
bool satisfies(const ConstraintSystem& s, std::span<const long> nu);

}  // namespace helpkit

#endif  // HELPKIT_SOLVER_HPP_
