// Order-by-order analysis with power-profile case splits.

#ifndef HELPKIT_PIPELINE_HPP_
#define HELPKIT_PIPELINE_HPP_

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "solver.hpp"

namespace helpkit {

enum class Status { eliminated, rationally_conjugate, open, undecided };

std::string to_string(Status s);

struct CaseResult {
  PowerProfile profile;
  SolutionSet solutions;
};

/// A solution for order k together with the tuples of all its proper powers;
/// keyed by order, including k itself.
using FullSolution = PowerFamily;

struct OrderReport {
  long order = 0;
  Status status = Status::open;
  std::vector<CaseResult> cases;
  std::vector<FullSolution> merged;  // in case order
  TableSelection selection;
  std::vector<std::string> tables_used;
  std::vector<std::string> notices;
  std::string reason;  // why the order is undecided
  double elapsed_ms = 0;
};

struct AnalyzerOptions {
  std::uint64_t case_cap = 1'000'000;
  unsigned jobs = 1;
  SolveOptions solve;
};

/// Divisors of the exponent greater than 1, ascending.
std::vector<long> candidate_orders(const TableBundle& b);

/// Exactly one nonzero partial augmentation at every level.
bool is_trivial(const FullSolution& s);

/// Memoizing analyzer; reports are computed once per (order, selection) and
/// then shared.  Safe to call from several threads.
class Analyzer {
public:
  explicit Analyzer(TableBundle b, AnalyzerOptions opt = {});

  const OrderReport& report(long k, const TableSelection& selection);
  const TableBundle& bundle() const { return b_; }

private:
  std::unique_ptr<OrderReport> compute(long k, const TableSelection& sel);
  bool has_no_solution(const ConstraintSystem& s) const;
  std::vector<CaseResult> solve_cases(const SystemBuilder& builder,
                                      std::vector<PowerProfile> profiles,
                                      std::string& failure) const;

  TableBundle b_;
  AnalyzerOptions opt_;
  std::mutex mu_;
  std::map<std::pair<long, TableSelection>, std::unique_ptr<OrderReport>>
      memo_;
};

OrderReport solutions_for_order(long k, const TableBundle& b,
                                const TableSelection& selection,
                                const AnalyzerOptions& opt = {});

struct PrimeGraph {
  std::vector<long> vertices;
  std::vector<std::pair<long, long>> edges;  // p < q, sorted
  bool operator==(const PrimeGraph&) const = default;
};

PrimeGraph prime_graph_of_group(const TableBundle& b);

/// Products pq of distinct primes of |G| with no element of order pq.
std::vector<long> kc_orders(const TableBundle& b);

struct KcVerdict {
  bool holds = true;
  std::vector<long> checked;    // kc_orders(b)
  std::vector<long> witnesses;  // checked orders that are not eliminated
};

/// reports must contain an entry for every order in kc_orders(b).
KcVerdict kc_check(const TableBundle& b,
                   const std::map<long, const OrderReport*>& reports);

}  // namespace helpkit

#endif  // HELPKIT_PIPELINE_HPP_
