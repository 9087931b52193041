#include "helpkit/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <set>
#include <thread>

namespace helpkit {

std::string to_string(Status s) {
  switch (s) {
  case Status::eliminated:
    return "ELIMINATED";
  case Status::rationally_conjugate:
    return "RATIONALLY_CONJUGATE";
  case Status::open:
    return "OPEN";
  case Status::undecided:
    return "UNDECIDED_BY_METHOD";
  }
  return "?";
}

std::vector<long> candidate_orders(const TableBundle& b) {
  std::vector<long> out;
  for (long d : divisors(b.exponent))
    if (d > 1)
      out.push_back(d);
  return out;
}

bool is_trivial(const FullSolution& s) {
  return std::all_of(s.begin(), s.end(), [](const auto& kv) {
    return kv.second.nonzero_count() == 1;
  });
}

Analyzer::Analyzer(TableBundle b, AnalyzerOptions opt)
    : b_(std::move(b)), opt_(opt) {
  if (opt_.jobs == 0)
    opt_.jobs = 1;
}

const OrderReport& Analyzer::report(long k, const TableSelection& selection) {
  const auto key = std::make_pair(k, selection);
  {
    std::lock_guard lock(mu_);
    if (auto it = memo_.find(key); it != memo_.end())
      return *it->second;
  }
  auto r = compute(k, selection);
  std::lock_guard lock(mu_);
  auto [it, fresh] = memo_.emplace(key, std::move(r));
  return *it->second;
}

namespace {

bool agree(const PowerFamily& a, const PowerFamily& b) {
  for (const auto& [m, t] : b) {
    auto it = a.find(m);
    if (it != a.end() && it->second != t)
      return false;
  }
  return true;
}

CaseResult empty_case(const SystemBuilder& builder, PowerProfile p) {
  CaseResult c;
  c.solutions.order = builder.order();
  c.solutions.unknowns = builder.unknowns();
  c.profile = std::move(p);
  return c;
}

}  // namespace

bool Analyzer::has_no_solution(const ConstraintSystem& s) const {
  try {
    return enumerate(s, opt_.solve).solutions.empty();
  } catch (const Unbounded&) {
  } catch (const SearchLimitExceeded&) {
  }
  return false;
}

std::vector<CaseResult> Analyzer::solve_cases(
    const SystemBuilder& builder, std::vector<PowerProfile> profiles,
    std::string& failure) const {
  std::vector<CaseResult> out(profiles.size());
  std::vector<std::string> errors(profiles.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next++) < profiles.size();) {
      try {
        out[i].solutions = enumerate(builder.build(profiles[i]), opt_.solve);
      } catch (const Unbounded& e) {
        errors[i] = e.what();
      } catch (const SearchLimitExceeded& e) {
        errors[i] = e.what();
      }
      out[i].profile = std::move(profiles[i]);
    }
  };
  const unsigned jobs =
      std::min<std::size_t>(opt_.jobs, std::max<std::size_t>(profiles.size(), 1));
  if (jobs <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j)
      pool.emplace_back(work);
  }
  for (std::size_t i = 0; i < errors.size(); ++i)
    if (!errors[i].empty()) {
      failure = "case " + std::to_string(i + 1) + ": " + errors[i];
      break;
    }
  return out;
}

std::unique_ptr<OrderReport> Analyzer::compute(long k,
                                               const TableSelection& sel) {
  if (k < 2 || b_.exponent % k != 0)
    throw std::invalid_argument(std::to_string(k) +
                                " does not divide the exponent " +
                                std::to_string(b_.exponent));
  auto r = std::make_unique<OrderReport>();
  r->order = k;
  r->selection = sel;

  const auto start = std::chrono::steady_clock::now();
  SystemBuilder builder(b_, k, sel);
  r->tables_used = builder.tables_used();
  r->notices = builder.notices();
  auto finish = [&] {
    r->elapsed_ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    return std::move(r);
  };

  // Families for the maximal proper divisors, largest first.  One
  // eliminated divisor settles k, so later divisors are not needed.
  std::vector<const OrderReport*> parts;
  for (long p : prime_divisors(k)) {
    if (k / p == 1)
      continue;
    const OrderReport& part = report(k / p, sel);
    if (part.status == Status::eliminated) {
      r->status = Status::eliminated;
      r->notices.push_back("order " + std::to_string(part.order) +
                           " is eliminated");
      return finish();
    }
    parts.push_back(&part);
  }
  for (const OrderReport* part : parts) {
    if (part->status == Status::undecided) {
      r->status = Status::undecided;
      r->reason = "order " + std::to_string(part->order) + " is undecided";
      return finish();
    }
  }

  std::vector<PowerFamily> families{{}};
  for (const OrderReport* part : parts) {
    std::vector<PowerFamily> next;
    for (const auto& f : families)
      for (const auto& g : part->merged) {
        if (!agree(f, g))
          continue;
        if (next.size() >= opt_.case_cap) {
          r->status = Status::undecided;
          r->reason = "more than " + std::to_string(opt_.case_cap) +
                      " power profiles";
          return finish();
        }
        PowerFamily h = f;
        h.insert(g.begin(), g.end());
        next.push_back(std::move(h));
      }
    families = std::move(next);
  }

  std::vector<PowerProfile> profiles;
  for (auto& f : families)
    profiles.push_back({k, std::move(f)});

  // One shared solve often settles every case at once.
  bool settled = false;
  if (profiles.size() > 1)
    settled = has_no_solution(builder.build_common());
  std::string failure;
  if (settled) {
    r->notices.push_back("profile-independent forms have no solution");
    for (auto& p : profiles)
      r->cases.push_back(empty_case(builder, std::move(p)));
  } else {
    // Forms that only see the tuples of one divisor's family can rule out
    // that family for every profile containing it.
    std::vector<bool> dead(profiles.size(), false);
    for (const OrderReport* part : parts) {
      if (part->merged.size() >= profiles.size())
        continue;
      std::set<PowerFamily> ruled_out;
      for (const auto& g : part->merged)
        if (has_no_solution(builder.build_partial({k, g})))
          ruled_out.insert(g);
      if (ruled_out.empty())
        continue;
      const PowerFamily& keys = part->merged.front();
      std::size_t n = 0;
      for (std::size_t i = 0; i < profiles.size(); ++i) {
        PowerFamily restricted;
        for (const auto& kv : keys)
          restricted.insert(*profiles[i].tuples.find(kv.first));
        if (!dead[i] && ruled_out.contains(restricted)) {
          dead[i] = true;
          ++n;
        }
      }
      r->notices.push_back(std::to_string(n) + " cases settled by the order " +
                           std::to_string(part->order) + " tuples alone");
    }
    std::vector<PowerProfile> live;
    for (std::size_t i = 0; i < profiles.size(); ++i)
      if (!dead[i])
        live.push_back(profiles[i]);
    auto solved = solve_cases(builder, std::move(live), failure);
    std::size_t next = 0;
    for (std::size_t i = 0; i < profiles.size(); ++i)
      r->cases.push_back(dead[i] ? empty_case(builder, std::move(profiles[i]))
                                 : std::move(solved[next++]));
  }
  if (!failure.empty()) {
    r->status = Status::undecided;
    r->reason = failure;
    return finish();
  }

  for (const auto& c : r->cases)
    for (const auto& s : c.solutions.solutions) {
      FullSolution f = c.profile.tuples;
      f[k] = s;
      r->merged.push_back(std::move(f));
    }
  if (r->merged.empty())
    r->status = Status::eliminated;
  else if (std::all_of(r->merged.begin(), r->merged.end(), is_trivial))
    r->status = Status::rationally_conjugate;
  else
    r->status = Status::open;
  return finish();
}

OrderReport solutions_for_order(long k, const TableBundle& b,
                                const TableSelection& selection,
                                const AnalyzerOptions& opt) {
  Analyzer a(b, opt);
  return a.report(k, selection);
}

PrimeGraph prime_graph_of_group(const TableBundle& b) {
  PrimeGraph g;
  g.vertices = prime_set(b);
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    for (std::size_t j = i + 1; j < g.vertices.size(); ++j) {
      const long pq = g.vertices[i] * g.vertices[j];
      for (const auto& c : b.classes)
        if (c.element_order % pq == 0) {
          g.edges.emplace_back(g.vertices[i], g.vertices[j]);
          break;
        }
    }
  return g;
}

std::vector<long> kc_orders(const TableBundle& b) {
  const PrimeGraph g = prime_graph_of_group(b);
  std::vector<long> out;
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    for (std::size_t j = i + 1; j < g.vertices.size(); ++j) {
      const std::pair<long, long> e{g.vertices[i], g.vertices[j]};
      if (std::find(g.edges.begin(), g.edges.end(), e) == g.edges.end())
        out.push_back(e.first * e.second);
    }
  std::sort(out.begin(), out.end());
  return out;
}

KcVerdict kc_check(const TableBundle& b,
                   const std::map<long, const OrderReport*>& reports) {
  KcVerdict v;
  v.checked = kc_orders(b);
  for (long k : v.checked) {
    auto it = reports.find(k);
    if (it == reports.end() || it->second == nullptr)
      throw std::invalid_argument("no report for order " + std::to_string(k));
    if (it->second->status != Status::eliminated)
      v.witnesses.push_back(k);
  }
  v.holds = v.witnesses.empty();
  return v;
}

}  // namespace helpkit
