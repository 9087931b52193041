// helpkit: validate character table bundles and run partial augmentation
// analyses.
//
//   helpkit validate <bundle>
//   helpkit analyze --bundle <path> [--orders kc|all|k1,k2,...]
//                   [--tables ordinary|all|ordinary,brauer3,...]
//                   [--format text|json] [--case-cap N] [--jobs N]
//                   [--strict] [--expected <file>] [--no-timing]
//   helpkit prime-graph --bundle <path>
//
// Exit codes: 0 done, 1 validation findings, 2 input or usage error,
// 3 undecided order under --strict.

#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "helpkit/report.hpp"

using namespace helpkit;

namespace {

struct LoadFailure {
  std::string message;
};

TableBundle load(const std::string& path) {
  try {
    return load_bundle(path);
  } catch (const ParseError& e) {
    throw LoadFailure{path + ": parse error at byte " +
                      std::to_string(e.byte_offset) + ": " + e.what()};
  } catch (const std::exception& e) {
    throw LoadFailure{path + ": " + e.what()};
  }
}

std::vector<long> parse_orders(const std::string& spec, const TableBundle& b) {
  if (spec == "kc")
    return kc_orders(b);
  const auto candidates = candidate_orders(b);
  if (spec == "all")
    return candidates;
  std::vector<long> out;
  std::istringstream in(spec);
  std::string item;
  while (std::getline(in, item, ',')) {
    long k = 0;
    std::size_t used = 0;
    try {
      k = std::stol(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || used == 0)
      throw std::invalid_argument("bad order '" + item + "'");
    if (std::find(candidates.begin(), candidates.end(), k) == candidates.end())
      throw std::invalid_argument(std::to_string(k) +
                                  " is not a divisor > 1 of the exponent " +
                                  std::to_string(b.exponent));
    if (std::find(out.begin(), out.end(), k) == out.end())
      out.push_back(k);
  }
  return out;
}

int cmd_validate(const std::string& path) {
  const TableBundle b = load(path);
  const auto findings = validate_bundle(b);
  for (const auto& f : findings)
    std::cout << f << '\n';
  std::cout << b.group_name << ": " << findings.size()
            << (findings.size() == 1 ? " finding\n" : " findings\n");
  return findings.empty() ? 0 : 1;
}

struct AnalyzeConfig {
  std::string bundle;
  std::string orders = "kc";
  std::string tables = "all";
  std::string format = "text";
  std::uint64_t case_cap = 1'000'000;
  unsigned jobs = 1;
  bool strict = false;
  bool timing = true;
  std::string expected;
};

int cmd_analyze(const AnalyzeConfig& cfg) {
  const TableBundle b = load(cfg.bundle);
  TableSelection sel;
  std::vector<long> orders;
  Expectations expected;
  try {
    sel = TableSelection::parse(cfg.tables);
    orders = parse_orders(cfg.orders, b);
    if (!cfg.expected.empty())
      expected = load_expectations(cfg.expected);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  AnalyzerOptions opt;
  opt.case_cap = cfg.case_cap;
  opt.jobs = cfg.jobs;
  Analyzer analyzer(b, opt);
  std::vector<const OrderReport*> reports;
  for (long k : orders)
    reports.push_back(&analyzer.report(k, sel));

  std::optional<KcVerdict> kc;
  std::map<long, const OrderReport*> by_order;
  for (const OrderReport* r : reports)
    by_order[r->order] = r;
  const auto needed = kc_orders(b);
  if (cfg.orders == "kc" ||
      (!needed.empty() &&
       std::all_of(needed.begin(), needed.end(),
                   [&](long k) { return by_order.count(k) != 0; })))
    kc = kc_check(b, by_order);

  const auto cmp = compare(expected, reports);
  RenderOptions ro;
  ro.timing = cfg.timing;
  if (cfg.format == "json") {
    std::cout << run_json(b.group_name, reports, kc, cmp, ro) << '\n';
  } else {
    for (const OrderReport* r : reports)
      std::cout << report_text(*r, ro);
    if (kc)
      std::cout << kc_text(*kc);
    if (!cmp.empty())
      std::cout << comparison_text(cmp);
  }

  if (cfg.strict)
    for (const OrderReport* r : reports)
      if (r->status == Status::undecided)
        return 3;
  return 0;
}

int cmd_prime_graph(const std::string& path) {
  std::cout << prime_graph_text(prime_graph_of_group(load(path)));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partial augmentation analysis for integral group rings"};
  app.require_subcommand(1);

  std::string validate_path;
  auto* validate = app.add_subcommand("validate", "Check a table bundle");
  validate->add_option("bundle", validate_path, "Bundle file")->required();

  AnalyzeConfig cfg;
  auto* analyze = app.add_subcommand("analyze", "Analyze unit orders");
  analyze->add_option("--bundle", cfg.bundle, "Bundle file")->required();
  analyze->add_option("--orders", cfg.orders, "kc, all, or a comma list")
      ->capture_default_str();
  analyze->add_option("--tables", cfg.tables,
                      "ordinary, all, or e.g. ordinary,brauer3,brauer5")
      ->capture_default_str();
  analyze->add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  analyze->add_option("--case-cap", cfg.case_cap,
                      "Maximum power profiles per order")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  analyze->add_option("--jobs", cfg.jobs, "Worker threads per order")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  analyze->add_flag("--strict", cfg.strict,
                    "Exit 3 if an order is undecided by the method");
  analyze->add_option("--expected", cfg.expected,
                      "JSON file of expected statuses by order");
  bool no_timing = false;
  analyze->add_flag("--no-timing", no_timing,
                    "Report elapsed_ms as 0 for reproducible output");

  std::string graph_path;
  auto* graph = app.add_subcommand("prime-graph", "Print the prime graph");
  graph->add_option("--bundle", graph_path, "Bundle file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*validate)
      return cmd_validate(validate_path);
    if (*analyze) {
      cfg.timing = !no_timing;
      return cmd_analyze(cfg);
    }
    return cmd_prime_graph(graph_path);
  } catch (const LoadFailure& e) {
    std::cerr << "error: " << e.message << '\n';
    return 2;
  }
}
