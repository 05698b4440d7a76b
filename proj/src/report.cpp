#include "dres/report.hpp"

#include "dres/parse.hpp"

#include <sstream>

namespace dres {

namespace {

std::string orders_line(const DppeSystem& sys) {
  std::ostringstream out;
  for (int i = 0; i < sys.n(); ++i) out << (i ? ", " : "") << "o" << i + 1 << " = " << sys.order(i);
  out << ", N = " << sys.total_order();
  return out.str();
}

std::string gamma_line(const GammaData& g) {
  std::ostringstream out;
  for (std::size_t j = 0; j < g.per_param.size(); ++j) {
    out << (j ? ", " : "") << "gamma" << j + 1 << " = " << g.per_param[j];
  }
  out << ", gamma = " << g.total;
  return out.str();
}

std::string witness_text(const PropernessReport& p) {
  std::ostringstream out;
  for (const auto& [j, g] : p.nontrivial_gcrds) out << "  gcrd of column u" << j + 1 << ": " << g.to_string() << "\n";
  for (int j : p.unresolved_params) out << "  u" << j + 1 << " is not an order-0 lead\n";
  return out.str();
}

CoeffMatrix shown_matrix(const DppeSystem& sys) { return build_matrix(build_ps(sys, PsVariant::Complete)); }

}  // namespace

std::string report_text(const DppeSystem& sys, const ImplicitResult& r, const ReportOptions& opt) {
  std::ostringstream out;
  out << "system:\n";
  std::istringstream lines(print_system(sys));
  for (std::string line; std::getline(lines, line);) out << "  " << line << "\n";
  out << "orders: " << orders_line(sys) << "\n";
  out << "completeness: " << gamma_line(r.gamma) << "\n";
  out << "dRes^h  = " << r.dres_h.to_string() << "\n";
  out << "dRes    = " << r.dres.to_string() << "\n";
  out << "dCRes^h = " << r.dcres_h.to_string() << "\n";
  if (r.dcres) out << "dCRes   = " << r.dcres->to_string() << "\n";
  if (r.reduced) {
    out << "gcrd-reduced system:\n";
    std::istringstream red(print_system(*r.reduced));
    for (std::string line; std::getline(red, line);) out << "  " << line << "\n";
    if (r.reduced_dcres_h) out << "dCRes^h of reduced system = " << r.reduced_dcres_h->to_string() << "\n";
  }
  if (opt.show_matrix) out << "M(L_gamma):\n" << shown_matrix(sys).to_text();
  out << "method: " << to_string(r.method) << "\n";
  out << "dimension: " << r.dimension << "\n";
  if (r.implicit) out << "implicit equation: " << r.implicit->to_string() << " = 0\n";
  if (!r.implicit || r.method == Method::Echelon) {
    out << "characteristic set (" << r.char_set.size() << " elements):\n";
    for (const auto& a : r.char_set) out << "  " << a.to_string() << "\n";
    out << "elements free of u: " << r.char_set_a0.size() << "\n";
  }
  out << "properness: " << to_string(r.proper.verdict);
  if (!r.proper.reason.empty()) out << " (" << r.proper.reason << ")";
  out << "\n" << witness_text(r.proper);
  if (r.inversion) {
    out << "inversion maps:\n";
    for (std::size_t j = 0; j < r.inversion->size(); ++j) {
      out << "  u" << j + 1 << " = " << (*r.inversion)[j].to_string() << "\n";
    }
  }
  if (opt.check_trials) {
    out << "check: " << (opt.check_passed ? "vanishes" : "DOES NOT VANISH") << " on " << *opt.check_trials
        << " random substitutions\n";
  }
  return out.str();
}

std::string report_latex(const DppeSystem& sys, const ImplicitResult& r, const ReportOptions& opt) {
  std::ostringstream out;
  out << "\\begin{align*}\n";
  for (int i = 0; i < sys.n(); ++i) {
    LinDiffPoly rhs(sys.a(i));
    for (int j = 0; j < sys.params(); ++j) rhs -= apply(sys.op(i, j), j + 1);
    out << "x_{" << i + 1 << "} &= " << rhs.to_latex() << (i + 1 < sys.n() ? " \\\\\n" : "\n");
  }
  out << "\\end{align*}\n";
  out << "$\\gamma = " << r.gamma.total << "$, $\\partial{\\rm Res}^h = " << r.dres_h.to_latex()
      << "$, $\\partial{\\rm CRes}^h = " << r.dcres_h.to_latex() << "$\n\n";
  if (opt.show_matrix) out << "\\[ M(L_{\\gamma}) = " << shown_matrix(sys).to_latex() << " \\]\n";
  if (r.implicit) {
    out << "\\[ " << r.implicit->to_latex() << " = 0 \\]\n";
  } else {
    out << "\\begin{align*}\n";
    for (std::size_t k = 0; k < r.char_set.size(); ++k) {
      out << "& " << r.char_set[k].to_latex() << (k + 1 < r.char_set.size() ? " \\\\\n" : "\n");
    }
    out << "\\end{align*}\n";
  }
  if (r.inversion) {
    out << "\\begin{align*}\n";
    for (std::size_t j = 0; j < r.inversion->size(); ++j) {
      out << "u_{" << j + 1 << "} &= " << (*r.inversion)[j].to_latex() << (j + 1 < r.inversion->size() ? " \\\\\n" : "\n");
    }
    out << "\\end{align*}\n";
  }
  return out.str();
}

nlohmann::ordered_json poly_to_json(const LinDiffPoly& p) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [d, c] : p.sorted_terms()) terms.push_back({d.variable_name(), d.order, c.to_string()});
  nlohmann::ordered_json j;
  j["terms"] = std::move(terms);
  j["constant"] = p.constant().to_string();
  return j;
}

LinDiffPoly poly_from_json(const nlohmann::json& j) {
  LinDiffPoly p(parse_ratfunc(j.at("constant").get<std::string>()));
  for (const auto& term : j.at("terms")) {
    const std::string name = term.at(0).get<std::string>();
    const int order = term.at(1).get<int>();
    const RatFunc c = parse_ratfunc(term.at(2).get<std::string>());
    const LinDiffPoly v = parse_diffpoly(name);
    if (v.terms().size() != 1) throw std::invalid_argument("bad variable name '" + name + "'");
    Derivative d = v.terms().begin()->first;
    d.order = order;
    p.add_term(d, c);
  }
  return p;
}

nlohmann::ordered_json report_json(const DppeSystem& sys, const ImplicitResult& r, const ReportOptions& opt) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["system"] = print_system(sys);
  j["n"] = sys.n();
  ordered_json orders = ordered_json::array();
  for (int i = 0; i < sys.n(); ++i) orders.push_back(sys.order(i));
  j["orders"] = orders;
  j["gamma"] = {{"per_param", r.gamma.per_param}, {"total", r.gamma.total}};
  j["resultants"] = {{"dres_h", r.dres_h.to_string()},
                     {"dres", poly_to_json(r.dres)},
                     {"dcres_h", r.dcres_h.to_string()},
                     {"dcres", r.dcres ? poly_to_json(*r.dcres) : ordered_json(nullptr)}};
  j["method"] = to_string(r.method);
  j["dimension"] = r.dimension;
  j["implicit"] = r.implicit ? poly_to_json(*r.implicit) : ordered_json(nullptr);
  ordered_json chain = ordered_json::array();
  for (const auto& a : r.char_set) chain.push_back(poly_to_json(a));
  j["char_set"] = chain;
  ordered_json a0 = ordered_json::array();
  for (const auto& a : r.char_set_a0) a0.push_back(poly_to_json(a));
  j["char_set_A0"] = a0;
  ordered_json gcrds = ordered_json::array();
  for (const auto& [col, g] : r.proper.nontrivial_gcrds) gcrds.push_back({{"column", col + 1}, {"gcrd", g.to_string()}});
  ordered_json unresolved = ordered_json::array();
  for (int p : r.proper.unresolved_params) unresolved.push_back(p + 1);
  j["proper"] = {{"verdict", to_string(r.proper.verdict)},
                 {"reason", r.proper.reason},
                 {"nontrivial_gcrds", gcrds},
                 {"unresolved_params", unresolved}};
  if (r.inversion) {
    ordered_json inv = ordered_json::array();
    for (const auto& m : *r.inversion) inv.push_back(poly_to_json(m));
    j["inversion"] = inv;
  } else {
    j["inversion"] = nullptr;
  }
  j["reduced_system"] = r.reduced ? ordered_json(print_system(*r.reduced)) : ordered_json(nullptr);
  if (opt.show_matrix) {
    const CoeffMatrix m = shown_matrix(sys);
    ordered_json rows = ordered_json::array();
    for (std::size_t row = 0; row < m.rows(); ++row) {
      ordered_json cells = ordered_json::array();
      for (std::size_t c = 0; c < m.cols(); ++c) cells.push_back(m.entry(row, c).to_string());
      rows.push_back(cells);
    }
    j["matrix"] = {{"row_labels", m.row_labels}, {"rows", rows}};
  }
  if (opt.check_trials) j["check"] = {{"trials", *opt.check_trials}, {"passed", opt.check_passed}};
  return j;
}

}  // namespace dres
