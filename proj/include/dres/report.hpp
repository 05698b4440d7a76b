#ifndef DRES_REPORT_HPP
#define DRES_REPORT_HPP

#include "dres/elimination.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace dres {

struct ReportOptions {
  bool show_matrix = false;
  /// Trials run by --check and whether they all vanished.
  std::optional<int> check_trials;
  bool check_passed = true;
};

std::string report_text(const DppeSystem& sys, const ImplicitResult& r, const ReportOptions& opt);
std::string report_latex(const DppeSystem& sys, const ImplicitResult& r, const ReportOptions& opt);
nlohmann::ordered_json report_json(const DppeSystem& sys, const ImplicitResult& r, const ReportOptions& opt);

/// {"terms": [[variable, order, coefficient], ...], "constant": text}, terms
/// in decreasing R*, coefficients in parse_ratfunc syntax.
nlohmann::ordered_json poly_to_json(const LinDiffPoly& p);
LinDiffPoly poly_from_json(const nlohmann::json& j);

}  // namespace dres

#endif  // DRES_REPORT_HPP
