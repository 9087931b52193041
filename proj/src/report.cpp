#include "helpkit/report.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace helpkit {

using ojson = nlohmann::ordered_json;

namespace {

ojson tuple_json(const AugmentationTuple& t) {
  ojson o = ojson::object();
  for (std::size_t i = 0; i < t.classes.size(); ++i)
    o[t.classes[i]] = t.values[i];
  return o;
}

ojson report_object(const OrderReport& r, const RenderOptions& opt) {
  ojson o;
  o["order"] = r.order;
  o["status"] = to_string(r.status);
  ojson cases = ojson::array();
  for (const auto& c : r.cases) {
    ojson profile = ojson::object();
    for (const auto& [m, t] : c.profile.tuples)
      profile[std::to_string(m)] = tuple_json(t);
    ojson sols = ojson::array();
    for (const auto& s : c.solutions.solutions)
      sols.push_back(tuple_json(s));
    cases.push_back({{"profile", profile}, {"solutions", sols}});
  }
  o["cases"] = cases;
  o["tables_used"] = r.tables_used;
  o["elapsed_ms"] =
      opt.timing ? static_cast<long long>(std::llround(r.elapsed_ms)) : 0LL;
  if (!r.notices.empty())
    o["notices"] = r.notices;
  if (!r.reason.empty())
    o["reason"] = r.reason;
  return o;
}

std::string tuple_text(const AugmentationTuple& t) {
  std::string names, values;
  for (std::size_t i = 0; i < t.classes.size(); ++i) {
    names += (i ? ", " : "") + t.classes[i];
    values += (i ? ", " : "") + std::to_string(t.values[i]);
  }
  return "(" + names + ") = (" + values + ")";
}

}  // namespace

Expectations load_expectations(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot open " + path);
  ojson doc = ojson::parse(in);
  Expectations out;
  for (const auto& [k, v] : doc.items())
    out[std::stol(k)] = v.get<std::string>();
  return out;
}

std::vector<Comparison> compare(
    const Expectations& expected,
    const std::vector<const OrderReport*>& reports) {
  std::vector<Comparison> out;
  for (const auto& [k, status] : expected) {
    Comparison c{k, status, ""};
    for (const OrderReport* r : reports)
      if (r->order == k)
        c.observed = to_string(r->status);
    out.push_back(std::move(c));
  }
  return out;
}

std::string report_json(const OrderReport& r, const RenderOptions& opt) {
  return report_object(r, opt).dump(2);
}

std::string run_json(const std::string& group,
                     const std::vector<const OrderReport*>& reports,
                     const std::optional<KcVerdict>& kc,
                     const std::vector<Comparison>& comparison,
                     const RenderOptions& opt) {
  ojson o;
  o["group"] = group;
  ojson list = ojson::array();
  for (const OrderReport* r : reports)
    list.push_back(report_object(*r, opt));
  o["reports"] = list;
  if (kc)
    o["kc"] = {{"holds", kc->holds},
               {"checked", kc->checked},
               {"witnesses", kc->witnesses}};
  if (!comparison.empty()) {
    ojson cmp = ojson::array();
    for (const auto& c : comparison)
      cmp.push_back({{"order", c.order},
                     {"expected", c.expected},
                     {"observed", c.observed},
                     {"match", c.matches()}});
    o["comparison"] = cmp;
  }
  return o.dump(2);
}

std::string report_text(const OrderReport& r, const RenderOptions& opt) {
  std::ostringstream out;
  std::size_t total = 0;
  for (const auto& c : r.cases)
    total += c.solutions.solutions.size();
  out << "order " << r.order << ": " << to_string(r.status) << " ("
      << r.cases.size() << (r.cases.size() == 1 ? " case, " : " cases, ")
      << total << (total == 1 ? " solution" : " solutions");
  if (opt.timing)
    out << ", " << std::llround(r.elapsed_ms) << " ms";
  out << ")\n";
  out << "  tables:";
  for (const auto& t : r.tables_used)
    out << ' ' << t;
  out << '\n';
  for (const auto& n : r.notices)
    out << "  note: " << n << '\n';
  if (!r.reason.empty())
    out << "  undecided: " << r.reason << '\n';
  for (std::size_t i = 0; i < r.cases.size(); ++i) {
    const auto& c = r.cases[i];
    if (c.solutions.solutions.empty())
      continue;
    out << "  case " << i + 1 << ':';
    if (c.profile.tuples.empty())
      out << " no proper powers";
    for (const auto& [m, t] : c.profile.tuples)
      out << " [" << m << "] " << tuple_text(t);
    out << '\n';
    for (const auto& s : c.solutions.solutions)
      out << "    " << tuple_text(s) << '\n';
  }
  return out.str();
}

std::string kc_text(const KcVerdict& v) {
  std::ostringstream out;
  out << "orders checked:";
  for (long k : v.checked)
    out << ' ' << k;
  if (v.checked.empty())
    out << " none";
  out << '\n';
  if (v.holds) {
    out << "KC holds\n";
  } else {
    out << "KC not established; not eliminated:";
    for (long k : v.witnesses)
      out << ' ' << k;
    out << '\n';
  }
  return out.str();
}

std::string comparison_text(const std::vector<Comparison>& c) {
  std::ostringstream out;
  std::size_t ok = 0;
  for (const auto& x : c) {
    out << (x.matches() ? "  ok    " : "  DIFF  ") << x.order << ": expected "
        << x.expected << ", got "
        << (x.observed.empty() ? "(not analyzed)" : x.observed) << '\n';
    ok += x.matches();
  }
  out << ok << '/' << c.size() << " orders match the expected statuses\n";
  return out.str();
}

std::string prime_graph_text(const PrimeGraph& g) {
  std::ostringstream out;
  out << "vertices (" << g.vertices.size() << "):";
  for (long p : g.vertices)
    out << ' ' << p;
  out << "\nedges (" << g.edges.size() << "):";
  for (const auto& [p, q] : g.edges)
    out << ' ' << p << '-' << q;
  out << '\n';
  return out.str();
}

}  // namespace helpkit
