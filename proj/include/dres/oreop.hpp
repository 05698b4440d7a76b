#ifndef DRES_OREOP_HPP
#define DRES_OREOP_HPP

#include "dres/ratfunc.hpp"

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace dres {

/// Linear differential operator sum_k c_k d^k in Q(t)[d], coefficients on
/// the left, with the commutation rule d*c = c*d + c'.
class OreOp {
 public:
  OreOp() = default;
  OreOp(const RatFunc& c);  // NOLINT(google-explicit-constructor)
  OreOp(int c) : OreOp(RatFunc(c)) {}  // NOLINT(google-explicit-constructor)
  explicit OreOp(std::vector<RatFunc> coeffs);

  /// c * d^k.
  static OreOp monomial(const RatFunc& c, int k);
  static OreOp d() { return monomial(RatFunc(1), 1); }

  /// Degree in d; -1 for the zero operator.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const RatFunc& coeff(int k) const;
  const RatFunc& leading() const;
  const std::vector<RatFunc>& coefficients() const { return coeffs_; }
  /// True when every coefficient lies in Q.
  bool has_constant_coefficients() const;

  OreOp operator-() const;
  OreOp& operator+=(const OreOp& o);
  OreOp& operator-=(const OreOp& o);
  friend OreOp operator+(OreOp a, const OreOp& b) { return a += b; }
  friend OreOp operator-(OreOp a, const OreOp& b) { return a -= b; }
  friend bool operator==(const OreOp&, const OreOp&) = default;

  /// c * this (coefficient on the left).
  OreOp scaled(const RatFunc& c) const;
  OreOp monic() const;

  /// Applies the operator to a function of t.
  RatFunc apply_to(const RatFunc& f) const;

  /// Text using `d` for the derivation, e.g. `t*d^2+(t+1)*d+1`.
  std::string to_string() const;

 private:
  void trim();
  std::vector<RatFunc> coeffs_;
};

/// Composition a*b; apply(a*b, f) = apply(a, apply(b, f)).
OreOp ore_mul(const OreOp& a, const OreOp& b);
inline OreOp operator*(const OreOp& a, const OreOp& b) { return ore_mul(a, b); }

/// a = q*b + r with deg r < deg b. Throws ArithmeticError when b = 0.
std::pair<OreOp, OreOp> right_divmod(const OreOp& a, const OreOp& b);

/// q with a = q*g; throws ArithmeticError when the remainder is nonzero.
OreOp right_div_exact(const OreOp& a, const OreOp& g);

/// Monic greatest common right divisor, folded left to right. Zero inputs
/// are skipped; throws ArithmeticError when every input is zero.
OreOp gcrd(std::span<const OreOp> ops);
OreOp gcrd(const OreOp& a, const OreOp& b);

/// Operators (d1, d2) with deg d_i < deg l_i and (l2-d2)*l1 = (l1-d1)*l2.
///
/// Solves d1*l2 - d2*l1 = l1*l2 - l2*l1 coefficient-wise: one equation per
/// power d^k, k < deg l1 + deg l2, in the unknown coefficients of d1, d2.
/// Requires l1, l2 nonzero and right-coprime; a singular system raises
/// std::logic_error.
std::pair<OreOp, OreOp> commutator_correction(const OreOp& l1, const OreOp& l2);

}  // namespace dres

#endif  // DRES_OREOP_HPP
