#ifndef DRES_UNIPOLY_HPP
#define DRES_UNIPOLY_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dres {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised on division by zero, poles and inexact divisions.
class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Dense univariate polynomial in t over the rationals.
///
/// The coefficient vector is indexed by exponent and never stores a zero
/// leading coefficient; the zero polynomial has no coefficients.
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(int c);  // NOLINT(google-explicit-constructor)
  UniPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  explicit UniPoly(std::vector<Rational> coeffs);

  static UniPoly monomial(const Rational& c, int exponent);
  static UniPoly t() { return monomial(Rational(1), 1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  bool is_one() const;
  const Rational& coeff(int exponent) const;
  const Rational& leading() const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  UniPoly& scale(const Rational& c);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly& a, const UniPoly& b) = default;

  /// Euclidean division over Q; throws ArithmeticError when b is zero.
  static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
  /// a / b, throwing when b does not divide a.
  static UniPoly exact_div(const UniPoly& a, const UniPoly& b);

  UniPoly derivative() const;
  Rational eval(const Rational& x) const;
  UniPoly monic() const;

  /// Textual form such as `-1/2*t^3+t-4`.
  std::string to_string() const;
  std::string to_latex() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Monic gcd. gcd(0, 0) = 0. Works on primitive integer polynomials:
/// heuristic evaluation gcd first, primitive remainder sequence otherwise.
UniPoly gcd(UniPoly a, UniPoly b);

std::string rational_to_string(const Rational& q);

}  // namespace dres

#endif  // DRES_UNIPOLY_HPP
