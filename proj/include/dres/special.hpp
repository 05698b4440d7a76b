#ifndef DRES_SPECIAL_HPP
#define DRES_SPECIAL_HPP

#include "dres/elimination.hpp"

#include <stdexcept>

namespace dres {

/// The system is outside the reach of a closed-form path.
class NotApplicable : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Coprimality {
  bool coprime = false;
  /// Monic gcrd(l1, l2); a constant exactly when coprime.
  OreOp gcrd;
};
Coprimality coprimality_n2(const OreOp& l1, const OreOp& l2);

/// n = 2: A(X) = (L2-D2)(x1-a1) - (L1-D1)(x2-a2) after removing the common
/// right factor of L1, L2. Returned in canonical form.
LinDiffPoly implicit_n2(const DppeSystem& sys);

/// n = 3, coefficients in Q:
///   P(X) = (L21 L32 - L22 L31)(x1-a1) - (L11 L32 - L12 L31)(x2-a2)
///        + (L11 L22 - L12 L21)(x3-a3)
/// with commutative products. Throws NotApplicable for variable
/// coefficients or when every det(S_gamma i) vanishes, and std::logic_error
/// if the coefficient of x_{i,N-o_i-gamma} in P differs from
/// (-1)^(i+1) det(S_gamma i). Not normalized.
LinDiffPoly implicit_n3_const(const DppeSystem& sys);

/// Full reports for --method n2 / n3const. n3const additionally requires
/// dCRes^h != 0, since P is the implicit equation only then.
ImplicitResult implicitize_n2(const DppeSystem& sys);
ImplicitResult implicitize_n3_const(const DppeSystem& sys);

}  // namespace dres

#endif  // DRES_SPECIAL_HPP
