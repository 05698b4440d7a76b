#include "dres/elimination.hpp"
#include "dres/parse.hpp"
#include "dres/report.hpp"
#include "dres/special.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

enum ExitCode { kFound = 0, kInputError = 1, kLowDimension = 2, kCheckFailed = 3 };

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

dres::ImplicitResult run_method(const dres::DppeSystem& sys, const std::string& method) {
  if (method == "cres") {
    auto r = dres::implicitize_cres(sys);
    if (!r) throw dres::NotApplicable("dCRes^h vanishes; use --method auto or echelon");
    return *r;
  }
  if (method == "echelon") return dres::implicitize_echelon(sys);
  if (method == "n2") return dres::implicitize_n2(sys);
  if (method == "n3const") return dres::implicitize_n3_const(sys);
  return dres::implicitize(sys);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Implicitization of linear differential parametric equations"};
  app.require_subcommand(1);

  std::string file;
  std::string method = "auto";
  bool json = false;
  bool latex = false;
  bool show_matrix = false;
  int check = 0;

  CLI::App* imp = app.add_subcommand("implicitize", "compute the implicit equation of a system file");
  imp->add_option("FILE", file, "system file, one equation x<i> = ... per line")->required();
  imp->add_option("--method", method, "auto, cres, echelon, n2 or n3const")
      ->check(CLI::IsMember({"auto", "cres", "echelon", "n2", "n3const"}));
  imp->add_flag("--json", json, "print a JSON report");
  imp->add_flag("--latex", latex, "print LaTeX");
  imp->add_flag("--show-matrix", show_matrix, "include the coefficient matrix M(L_gamma)");
  imp->add_option("--check", check, "verify the result on N random substitutions")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kFound : kInputError;
  }
  if (json && latex) {
    std::cerr << "dres: --json and --latex are mutually exclusive\n";
    return kInputError;
  }

  try {
    const dres::DppeSystem sys = dres::parse_system(read_file(file));
    const dres::ImplicitResult r = run_method(sys, method);

    dres::ReportOptions opt;
    opt.show_matrix = show_matrix;
    if (check > 0) {
      opt.check_trials = check;
      if (r.implicit) {
        opt.check_passed = dres::vanishing_oracle(sys, *r.implicit, check);
      } else {
        for (const auto& a : r.char_set_a0) opt.check_passed = opt.check_passed && dres::vanishing_oracle(sys, a, check);
      }
    }

    if (json) {
      std::cout << dres::report_json(sys, r, opt).dump(2) << "\n";
    } else if (latex) {
      std::cout << dres::report_latex(sys, r, opt);
    } else {
      std::cout << dres::report_text(sys, r, opt);
    }
    if (!opt.check_passed) {
      std::cerr << "dres: check failed: the result does not vanish on the parametrization\n";
      return kCheckFailed;
    }
    return r.implicit ? kFound : kLowDimension;
  } catch (const dres::ParseError& e) {
    std::cerr << file << ": " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "dres: " << e.what() << "\n";
  }
  return kInputError;
}
