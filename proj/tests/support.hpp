#ifndef DRES_TEST_SUPPORT_HPP
#define DRES_TEST_SUPPORT_HPP

// Generators and independent oracles shared by the unit and acceptance tests.

#include "dres/elimination.hpp"
#include "dres/parse.hpp"
#include "dres/special.hpp"

#include <fstream>
#include <random>
#include <sstream>
#include <string>

namespace dres::testing {

inline std::string read_data(const std::string& name) {
  std::ifstream in(std::string(DRES_TEST_DATA) + "/" + name);
  if (!in) throw std::runtime_error("missing test data " + name);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline DppeSystem load_system(const std::string& name) { return parse_system(read_data(name)); }

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool chance(int percent) { return uniform(1, 100) <= percent; }

  Rational rational(int bound = 9) {
    Rational q(uniform(-bound, bound), uniform(1, 4));
    q.canonicalize();
    return q;
  }

  UniPoly poly(int max_degree, int bound = 9) {
    std::vector<Rational> c(static_cast<std::size_t>(max_degree) + 1);
    for (auto& v : c) v = uniform(-bound, bound);
    return UniPoly(std::move(c));
  }

  UniPoly nonzero_poly(int max_degree, int bound = 9) {
    for (;;) {
      UniPoly p = poly(max_degree, bound);
      if (!p.is_zero()) return p;
    }
  }

  RatFunc ratfunc(int max_degree) {
    UniPoly den = chance(50) ? UniPoly(1) : nonzero_poly(max_degree, 5);
    return RatFunc(poly(max_degree), den);
  }

  /// Operator of degree exactly `degree` (or zero for -1) with coefficients
  /// polynomial in t of degree <= coeff_degree.
  OreOp op(int degree, int coeff_degree, bool rational_coeffs = false) {
    if (degree < 0) return OreOp();
    std::vector<RatFunc> c(static_cast<std::size_t>(degree) + 1);
    for (auto& v : c) v = rational_coeffs ? ratfunc(coeff_degree) : RatFunc(poly(coeff_degree, 5));
    while (c.back().is_zero()) c.back() = RatFunc(nonzero_poly(coeff_degree, 5));
    return OreOp(std::move(c));
  }

  OreOp op_upto(int max_degree, int coeff_degree, bool rational_coeffs = false) {
    return op(uniform(0, max_degree), coeff_degree, rational_coeffs);
  }

  /// Random valid system; each L_ij is zero with probability zero_percent.
  DppeSystem system(int n, int max_degree, int coeff_degree, int zero_percent = 20) {
    for (;;) {
      std::vector<RatFunc> a;
      std::vector<std::vector<OreOp>> ops;
      for (int i = 0; i < n; ++i) {
        a.emplace_back(poly(2, 5));
        std::vector<OreOp> row;
        for (int j = 0; j < n - 1; ++j) {
          row.push_back(chance(zero_percent) ? OreOp() : op_upto(max_degree, coeff_degree));
        }
        ops.push_back(std::move(row));
      }
      try {
        return DppeSystem(std::move(a), std::move(ops));
      } catch (const InvalidSystem&) {
      }
    }
  }

 private:
  std::mt19937_64 rng_;
};

inline Rational binomial(int n, int k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(r);
}

/// Product by the Leibniz formula d^i * psi = sum_s C(i,s) psi^(i-s) d^s,
/// independent of the engine's iterated shift.
inline OreOp leibniz_mul(const OreOp& a, const OreOp& b) {
  if (a.is_zero() || b.is_zero()) return OreOp();
  std::vector<RatFunc> out(static_cast<std::size_t>(a.degree() + b.degree()) + 1);
  for (int i = 0; i <= a.degree(); ++i) {
    for (int j = 0; j <= b.degree(); ++j) {
      for (int s = 0; s <= i; ++s) {
        out[static_cast<std::size_t>(s + j)] += a.coeff(i) * RatFunc(binomial(i, s)) * b.coeff(j).derive(i - s);
      }
    }
  }
  return OreOp(std::move(out));
}

/// Laplace expansion along the first row; for small matrices only.
inline RatFunc cofactor_det(const KMatrix& m) {
  if (m.rows() == 0) return RatFunc(1);
  if (m.rows() == 1) return m(0, 0);
  RatFunc acc;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (m(0, c).is_zero()) continue;
    RatFunc term = m(0, c) * cofactor_det(m.without({0}, {c}));
    acc += c % 2 == 0 ? term : -term;
  }
  return acc;
}

/// det of m(t0) by Gaussian elimination over Q.
inline Rational det_at(const KMatrix& m, const Rational& t0) {
  const std::size_t n = m.rows();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) a[r][c] = m(r, c).eval_at(t0);
  }
  Rational det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return Rational(0);
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

/// p = c*q for some nonzero c in K (both zero counts as proportional).
inline bool proportional(const LinDiffPoly& p, const LinDiffPoly& q) {
  if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
  if (p.terms().size() != q.terms().size()) return false;
  RatFunc ratio;
  if (auto l = p.lead()) {
    if (q.coeff(*l).is_zero()) return false;
    ratio = p.coeff(*l) / q.coeff(*l);
  } else {
    ratio = p.constant() / q.constant();
  }
  return q.scaled(ratio) == p;
}

/// Expected polynomials, transcribed as printed.
inline const char* kIntroImplicit = "(t-1)*x1''-t*x3'-(t-1)*x3''+x2";
inline const char* kRemarkImplicit = "x1''-2*x2''-2*x2'-x2+d(x3,3)+x3''+x3'+x3";
inline const char* kGammaDcres =
    "4*x3-8-8*x2'+12*t+12*x3''+4*d(x1,3)+4*x1'-20*d(x2,3)-8*x2''+4*x1''+4*x1-4*x2+4*t^2";

/// M(L) of the 13-row example, row by row, as printed.
inline const std::vector<std::vector<const char*>> kMatrix13 = {
    {"-t", "-3", "-1", "-1", "0", "0", "0", "0", "0", "0", "0", "0", "d(x1,4)"},
    {"0", "0", "-t", "-3", "0", "-1", "0", "0", "0", "0", "0", "0", "d(x1,3)"},
    {"0", "0", "0", "0", "-t", "-3", "1", "-1", "0", "0", "0", "0", "x1''"},
    {"0", "0", "0", "0", "0", "0", "-t", "-3", "2", "-1", "0", "0", "x1'-7"},
    {"0", "0", "0", "0", "0", "0", "0", "0", "-t", "-3", "3", "-1", "x1-7*t"},
    {"-5", "1", "0", "0", "0", "-1", "0", "0", "0", "0", "0", "0", "d(x2,3)"},
    {"0", "0", "-5", "1", "0", "0", "0", "-1", "0", "0", "0", "0", "x2''"},
    {"0", "0", "0", "0", "-5", "1", "0", "0", "0", "-1", "0", "0", "x2'"},
    {"0", "0", "0", "0", "0", "0", "-5", "1", "0", "0", "0", "-1", "x2"},
    {"0", "1", "-t^2", "0", "-6*t", "-1", "-6", "0", "0", "0", "0", "0", "d(x3,3)"},
    {"0", "0", "0", "1", "-t^2", "0", "-4*t", "-1", "-2", "0", "0", "0", "x3''"},
    {"0", "0", "0", "0", "0", "1", "-t^2", "0", "-2*t", "-1", "0", "0", "x3'"},
    {"0", "0", "0", "0", "0", "0", "0", "1", "-t^2", "0", "0", "-1", "x3"},
};

/// M(L_gamma) of the gamma example, as printed.
inline const std::vector<std::vector<const char*>> kMatrix11 = {
    {"-2", "0", "-1", "-1", "0", "0", "0", "0", "0", "0", "d(x1,3)"},
    {"0", "-2", "0", "0", "-1", "-1", "0", "0", "0", "0", "x1''"},
    {"0", "0", "-2", "0", "0", "0", "-1", "-1", "0", "0", "x1'-1"},
    {"0", "0", "0", "0", "-2", "0", "0", "0", "-1", "-1", "x1-t"},
    {"-1", "0", "-1", "-2", "0", "0", "0", "0", "0", "0", "d(x2,3)"},
    {"0", "-1", "0", "0", "-1", "-2", "0", "0", "0", "0", "x2''-2"},
    {"0", "0", "-1", "0", "0", "0", "-1", "-2", "0", "0", "x2'-2*t"},
    {"0", "0", "0", "0", "-1", "0", "0", "0", "-1", "-2", "x2-t^2"},
    {"-1", "0", "-1", "-3", "0", "-1", "0", "0", "0", "0", "x3''"},
    {"0", "-1", "0", "0", "-1", "-3", "0", "-1", "0", "0", "x3'"},
    {"0", "0", "-1", "0", "0", "0", "-1", "-3", "0", "-1", "x3-5"},
};

/// Number of entries of m that differ from the printed table.
inline int matrix_mismatches(const CoeffMatrix& m, const std::vector<std::vector<const char*>>& printed) {
  if (m.rows() != printed.size()) return static_cast<int>(printed.size() * printed.size());
  int bad = 0;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (m.cols() != printed[r].size()) return static_cast<int>(printed.size() * printed.size());
    for (std::size_t c = 0; c < m.cols(); ++c) bad += m.entry(r, c) == parse_diffpoly(printed[r][c]) ? 0 : 1;
  }
  return bad;
}

}  // namespace dres::testing

#endif  // DRES_TEST_SUPPORT_HPP
