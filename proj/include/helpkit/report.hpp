// Text and JSON renderings of analysis results.

#ifndef HELPKIT_REPORT_HPP_
#define HELPKIT_REPORT_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pipeline.hpp"

namespace helpkit {

struct RenderOptions {
  bool timing = true;  // false writes elapsed_ms as 0
};

/// Expected statuses by order, as read from a {"k": "STATUS", ...} file.
using Expectations = std::map<long, std::string>;

Expectations load_expectations(const std::string& path);

struct Comparison {
  long order;
  std::string expected;
  std::string observed;  // empty when the order was not analyzed
  bool matches() const { return expected == observed; }
};

std::vector<Comparison> compare(const Expectations& expected,
                                const std::vector<const OrderReport*>& reports);

std::string report_json(const OrderReport& r, const RenderOptions& opt = {});

/// Whole analyze run: reports, optional KC verdict and comparison.
std::string run_json(const std::string& group,
                     const std::vector<const OrderReport*>& reports,
                     const std::optional<KcVerdict>& kc,
                     const std::vector<Comparison>& comparison,
                     const RenderOptions& opt = {});

std::string report_text(const OrderReport& r, const RenderOptions& opt = {});

std::string kc_text(const KcVerdict& v);

std::string comparison_text(const std::vector<Comparison>& c);

std::string prime_graph_text(const PrimeGraph& g);

}  // namespace helpkit

#endif  // HELPKIT_REPORT_HPP_
