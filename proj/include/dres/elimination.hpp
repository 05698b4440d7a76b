#ifndef DRES_ELIMINATION_HPP
#define DRES_ELIMINATION_HPP

#include "dres/diffpoly.hpp"
#include "dres/resultant.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dres {

/// Reduced echelon basis of the algebraic ideal (PS), read from the RREF of
/// the extended coefficient matrix with columns in decreasing R*: every
/// U-derivative, then X-derivatives (x_1 first, orders descending), then 1.
struct EchelonBasis {
  /// B_0 < B_1 < ... in R*; each lead has coefficient 1.
  std::vector<LinDiffPoly> rows;
  PsVariant source = PsVariant::Full;
  /// U-derivative columns of the source prolongation set.
  std::vector<Derivative> u_columns;

  /// G_0: the rows free of U.
  std::vector<LinDiffPoly> x_rows() const;
};

EchelonBasis echelon(const PsSet& ps);

/// det E(L): the echelon rows as a coefficient matrix over the U columns,
/// top row B_{L-1}, with the X-part as last column. The reduction scales
/// rows, so this is det M(L) times a nonzero element of K.
LinDiffPoly echelon_det(const EchelonBasis& basis);

/// Characteristic set of [PS] w.r.t. R*, starting from A = {B_0} and
/// scanning the basis upwards. Each nonzero prem(B_i, A) joins A; members
/// whose lead is a derivative of the newcomer's lead are re-queued and the
/// rest are tail-reduced, so A stays autoreduced. Leads are monic and the
/// result is sorted ascending.
std::vector<LinDiffPoly> characteristic_set(const EchelonBasis& basis);

/// A_0 = A intersected with K{X}.
std::vector<LinDiffPoly> x_elements(const std::vector<LinDiffPoly>& chain);

/// The linear inversion maps U_j(X) with u_j = U_j(X), read from the basis
/// rows u_j - U_j(X). Throws std::domain_error when some u_j has no such row.
std::vector<LinDiffPoly> inversion_maps(const EchelonBasis& basis, int params);

enum class Properness { Proper, Improper, Undetermined };
std::string to_string(Properness p);

struct PropernessReport {
  Properness verdict = Properness::Undetermined;
  /// (0-based column j, gcrd) for every column whose gcrd has positive degree.
  std::vector<std::pair<int, OreOp>> nontrivial_gcrds;
  /// 0-based parameters that are not an order-0 lead of the characteristic set.
  std::vector<int> unresolved_params;
  std::string reason;
};

/// Proper when dCRes^h != 0; improper when some column gcrd is non-constant;
/// otherwise decided from the characteristic set of the full PS: proper iff
/// every u_j is the (order 0) lead of some element.
PropernessReport properness(const DppeSystem& sys);

/// gcrd(L_1j, ..., L_nj) for each column j.
std::vector<OreOp> column_gcrds(const DppeSystem& sys);

/// L'_ij with L_ij = L'_ij * gcrd_j; constants a_i unchanged.
DppeSystem reduce_system(const DppeSystem& sys);

enum class Method { Cres, CresReduced, Echelon, N2, N3Const };
std::string to_string(Method m);

struct ImplicitResult {
  std::optional<LinDiffPoly> implicit;
  int dimension = 0;
  GammaData gamma;
  /// Values for the input system.
  RatFunc dres_h;
  LinDiffPoly dres;
  RatFunc dcres_h;
  std::optional<LinDiffPoly> dcres;
  /// Set when the gcrd reduction changed the system.
  std::optional<DppeSystem> reduced;
  std::optional<RatFunc> reduced_dcres_h;
  PropernessReport proper;
  std::optional<std::vector<LinDiffPoly>> inversion;
  Method method = Method::Cres;
  std::vector<LinDiffPoly> char_set;
  std::vector<LinDiffPoly> char_set_a0;
};

/// Complete-resultant route on the system as given; nullopt when dCRes^h = 0.
std::optional<ImplicitResult> implicitize_cres(const DppeSystem& sys);
/// Characteristic-set route on the full PS of the gcrd-reduced system.
ImplicitResult implicitize_echelon(const DppeSystem& sys);
/// cres, then cres on the gcrd-reduced system, then the echelon route.
ImplicitResult implicitize(const DppeSystem& sys);

/// Clears denominators, removes the Q[t]-content, makes the integer content
/// 1, and fixes the sign so that the highest term under R* has a positive
/// leading coefficient. Two polynomials that differ by a factor in K have
/// the same canonical form.
LinDiffPoly canonical(const LinDiffPoly& p);

/// x_i(t) = a_i - sum_j L_ij(u_j(t)) for the given parameter functions.
std::vector<RatFunc> evaluate_parametrization(const DppeSystem& sys, const std::vector<RatFunc>& u);

/// Substitutes x_{ik} -> x_i^{(k)}(t) (and u_{jk} -> u_j^{(k)}(t)).
RatFunc substitute(const LinDiffPoly& p, const std::vector<RatFunc>& x, const std::vector<RatFunc>& u);

/// Membership test for the implicit ideal: for each trial, u_j := random
/// polynomial of degree <= 6 with coefficients in {-9..9}, and the candidate
/// must collapse to the zero function.
bool vanishing_oracle(const DppeSystem& sys, const LinDiffPoly& candidate, int trials,
                      std::uint64_t seed = 0x5eed);

}  // namespace dres

#endif  // DRES_ELIMINATION_HPP
