#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dres/report.hpp"
#include "support.hpp"

#include <sys/wait.h>

#include <cstdio>

using namespace dres;
using dres::testing::Gen;

namespace {

OreOp op(const char* s) { return parse_oreop(s); }

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(DRES_BINARY) + " " + args + " 2>&1";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  while (std::fgets(buf, sizeof buf, pipe)) r.out += buf;
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const char* name) { return std::string(DRES_TEST_DATA) + "/" + name; }

ParseError parse_failure(const std::string& text) {
  try {
    (void)parse_system(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a parse error for: " << text);
  return ParseError(ParseErrorKind::Syntax, 0, 0, "");
}

}  // namespace

TEST_CASE("parsing the intro system") {
  const DppeSystem s = testing::load_system("intro.dppe");
  CHECK(s.n() == 3);
  CHECK(s.op(0, 0) == op("-1"));
  CHECK(s.op(0, 1) == op("-d-1"));
  CHECK(s.op(1, 0) == op("-t*d"));
  CHECK(s.op(1, 1) == op("-d^2"));
  CHECK(s.op(2, 0) == op("-1"));
  CHECK(s.op(2, 1) == op("-d"));
  for (int i = 0; i < 3; ++i) CHECK(s.a(i).is_zero());
  CHECK(parse_system("x1 = u1 + u2 + u2'\nx2 = t*u1' + u2''\nx3 = u1 + u2'") == s);
}

TEST_CASE("coefficients and derivative syntax") {
  const DppeSystem s = parse_system("# comment\nx1 = u1 + 7\n\nx2 = (t^2+1)/(t-1)*u1''  # trailing\n");
  CHECK(s.op(1, 0) == OreOp({RatFunc(), RatFunc(), -parse_ratfunc("(t^2+1)/(t-1)")}));
  CHECK(s.a(0) == RatFunc(7));
  CHECK(parse_system("x1 = d(u1,3) - t\nx2 = u1'''\n").op(0, 0) == parse_system("x2 = d(u1,3)\nx1 = u1'''\n").op(1, 0));
  CHECK(parse_system("x1 = -(u1 - 2*u1')/t\nx2 = u1\n").op(0, 0) == op("1/t-2/t*d"));
}

TEST_CASE("parse errors carry kind and position") {
  ParseError e = parse_failure("x1 = u1*u2\nx2 = u1\nx3 = u2\n");
  CHECK(e.kind() == ParseErrorKind::Nonlinearity);
  CHECK(e.line() == 1);

  e = parse_failure("x1 = u1\nx2 = u1 + y\n");
  CHECK(e.kind() == ParseErrorKind::UnknownSymbol);
  CHECK(e.line() == 2);
  CHECK(e.col() == 11);
  CHECK(std::string(e.what()).find("line 2, col 11") != std::string::npos);

  CHECK(parse_failure("x1 = u1\nx3 = u1'\n").kind() == ParseErrorKind::NonContiguousIndices);
  CHECK(parse_failure("x1 = u1\nx2 = u1'\nx3 = u1''\n").kind() == ParseErrorKind::EmptyColumn);
  CHECK(parse_failure("x1 = u1 + 0*u2\nx2 = u1'\nx3 = u1''\n").kind() == ParseErrorKind::EmptyColumn);
  CHECK(parse_failure(testing::read_data("constants_only.dppe")).kind() == ParseErrorKind::ConstantEquation);
  CHECK(parse_failure("x1 = u1 +\nx2 = u1\n").kind() == ParseErrorKind::Syntax);
  CHECK(parse_failure("x1 = u1\nx2 = u3\n").kind() == ParseErrorKind::NonContiguousIndices);
  CHECK(parse_failure("x1 = t*u1^2\nx2 = u1\n").kind() == ParseErrorKind::Nonlinearity);
  CHECK(to_string(ParseErrorKind::EmptyColumn) == "empty column");
}

TEST_CASE("print and parse round-trip") {
  CHECK(parse_system(print_system(testing::load_system("gamma_example.dppe"))) ==
        testing::load_system("gamma_example.dppe"));
  Gen g(71);
  for (int k = 0; k < 100; ++k) {
    const DppeSystem s = g.system(g.uniform(2, 4), 3, 2);
    CHECK(parse_system(print_system(s)) == s);
  }
}

TEST_CASE("polynomial printing round-trips") {
  Gen g(72);
  for (int k = 0; k < 100; ++k) {
    LinDiffPoly p(g.ratfunc(2));
    for (int s = 0; s < 4; ++s) {
      const Derivative d{g.chance(50) ? VarKind::X : VarKind::U, g.uniform(1, 3), g.uniform(0, 5)};
      p.add_term(d, g.ratfunc(2));
    }
    CHECK(parse_diffpoly(p.to_string()) == p);
    CHECK(poly_from_json(poly_to_json(p)) == p);
    CHECK(poly_from_json(nlohmann::json::parse(poly_to_json(p).dump())) == p);
  }
}

TEST_CASE("JSON report round-trips the polynomials") {
  for (const char* f : {"intro.dppe", "gamma_example.dppe", "improper_remark.dppe"}) {
    const DppeSystem s = testing::load_system(f);
    const ImplicitResult r = implicitize(s);
    const auto j = nlohmann::json::parse(report_json(s, r, {}).dump());
    CHECK(j["n"] == 3);
    CHECK(j["method"] == to_string(r.method));
    REQUIRE(r.implicit.has_value());
    CHECK(poly_from_json(j["implicit"]) == *r.implicit);
    REQUIRE(j["char_set"].size() == r.char_set.size());
    for (std::size_t i = 0; i < r.char_set.size(); ++i) CHECK(poly_from_json(j["char_set"][i]) == r.char_set[i]);
    CHECK(parse_system(j["system"].get<std::string>()) == s);
  }
}

TEST_CASE("text and LaTeX reports") {
  const DppeSystem s = testing::load_system("gamma_example.dppe");
  const ImplicitResult r = implicitize(s);
  ReportOptions opt;
  opt.show_matrix = true;
  const std::string txt = report_text(s, r, opt);
  CHECK(txt.find("dCRes^h = -4") != std::string::npos);
  CHECK(txt.find("gamma1 = 2") != std::string::npos);
  CHECK(txt.find("x3-5") != std::string::npos);
  const std::string tex = report_latex(s, r, opt);
  CHECK(tex.find("x_{13}") != std::string::npos);
}

TEST_CASE("command line") {
  Run r = run("implicitize " + data("gamma_example.dppe") + " --check 20");
  CHECK(r.code == 0);
  CHECK(r.out.find("dCRes^h = -4") != std::string::npos);
  CHECK(r.out.find("implicit equation: d(x1,3)+x1''+x1'+x1-5*d(x2,3)-2*x2''-2*x2'-x2+3*x3''+x3+(t^2+3*t-2) = 0") !=
        std::string::npos);

  r = run("implicitize " + data("improper_remark.dppe"));
  CHECK(r.code == 0);
  CHECK(r.out.find("method: echelon") != std::string::npos);
  CHECK(r.out.find("properness: improper") != std::string::npos);

  r = run("implicitize " + data("constants_only.dppe"));
  CHECK(r.code == 1);
  CHECK(r.out.find("line 1, col 1") != std::string::npos);

  r = run("implicitize " + data("intro.dppe") + " --json");
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(poly_from_json(j["implicit"]) == canonical(parse_diffpoly(testing::kIntroImplicit)));

  CHECK(run("implicitize " + data("intro.dppe") + " --json --latex").code == 1);
  CHECK(run("implicitize " + data("intro.dppe") + " --method n2").code == 1);
  CHECK(run("implicitize " + data("gamma_example.dppe") + " --method n3const").code == 0);
  CHECK(run("implicitize " + data("intro.dppe") + " --method cres --latex").code == 0);
  CHECK(run("implicitize " + data("common_factor.dppe") + " --method cres").code == 1);
  CHECK(run("implicitize /nonexistent.dppe").code == 1);
  CHECK(run("").code == 1);
}

TEST_CASE("low dimension exits with code 2") {
  const std::string path = "low_dimension_fixture.dppe";
  {
    std::ofstream out(path);
    out << "x1 = u1 + u2\nx2 = u1' + u2'\nx3 = u1'' + u2''\n";
  }
  const Run r = run("implicitize " + path + " --check 5");
  CHECK(r.code == 2);
  CHECK(r.out.find("dimension: 1") != std::string::npos);
  std::remove(path.c_str());
}
