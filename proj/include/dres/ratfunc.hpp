#ifndef DRES_RATFUNC_HPP
#define DRES_RATFUNC_HPP

#include "dres/unipoly.hpp"

#include <string>

namespace dres {

/// Evaluation hit a zero of the denominator.
class PoleError : public ArithmeticError {
 public:
  using ArithmeticError::ArithmeticError;
};

/// Element of the differential field Q(t) with derivation d/dt.
///
/// Always stored as num/den with gcd(num, den) = 1 and den monic; zero is
/// 0/1. Two values are equal exactly when their stored forms are equal.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(int c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const Rational& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(UniPoly p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
  /// Normalizes; throws ArithmeticError on a zero denominator.
  RatFunc(UniPoly num, UniPoly den);

  static RatFunc t() { return RatFunc(UniPoly::t()); }

  const UniPoly& num() const { return num_; }
  const UniPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  /// True when the value lies in Q, i.e. its derivative vanishes.
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  /// The rational value of a constant element.
  Rational constant_value() const;

  RatFunc operator-() const;
  RatFunc inverse() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);

  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) = default;

  /// d/dt by the quotient rule.
  RatFunc derive() const;
  /// k-th derivative.
  RatFunc derive(int times) const;
  /// Value at t0; throws PoleError when den(t0) = 0.
  Rational eval_at(const Rational& t0) const;

  /// Grammar-compatible text, e.g. `(t^2+1)/(t-1)`, `3/2*t`, `-t`.
  std::string to_string() const;
  std::string to_latex() const;
  /// Number of additive terms in the printed form (used to decide on parentheses).
  bool is_single_term() const;

 private:
  void normalize();
  UniPoly num_;
  UniPoly den_;
};

}  // namespace dres

#endif  // DRES_RATFUNC_HPP
