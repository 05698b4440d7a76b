#ifndef DRES_RESULTANT_HPP
#define DRES_RESULTANT_HPP

#include "dres/diffpoly.hpp"
#include "dres/linalg.hpp"

#include <string>
#include <vector>

namespace dres {

/// Which prolongation set of F_1..F_n (or H_1..H_n) to build.
///
///   Full:                d^k F_i, k = N-o_i .. 0
///   Homogeneous:         d^k H_i, k = N-o_i-1 .. 0
///   Complete:            d^k F_i, k = N-o_i-gamma .. 0
///   CompleteHomogeneous: d^k H_i, k = N-o_i-gamma-1 .. 0
enum class PsVariant { Full, Homogeneous, Complete, CompleteHomogeneous };

struct PsEntry {
  int eq = 0;  ///< 0-based equation index i
  int k = 0;   ///< number of differentiations
  LinDiffPoly poly;
};

/// Prolongation set. Entries are grouped by equation (ascending) with the
/// derivative exponent descending inside each group.
struct PsSet {
  PsVariant variant = PsVariant::Full;
  std::vector<PsEntry> entries;
  /// U-derivative columns, in decreasing orderly ranking.
  std::vector<Derivative> u_columns;
  GammaData gamma;

  bool homogeneous() const {
    return variant == PsVariant::Homogeneous || variant == PsVariant::CompleteHomogeneous;
  }
  std::size_t size() const { return entries.size(); }
};

PsSet build_ps(const DppeSystem& sys, PsVariant variant);

/// Labeled coefficient matrix of a prolongation set. The U block is over
/// K; the trailing constant column (absent for homogeneous variants) holds
/// the K{X}-part of each row, e.g. x_{11}-7.
struct CoeffMatrix {
  std::vector<std::string> row_labels;
  std::vector<Derivative> u_columns;
  KMatrix u_block;
  std::vector<LinDiffPoly> constant_column;

  bool has_constant_column() const { return !constant_column.empty(); }
  std::size_t rows() const { return u_block.rows(); }
  std::size_t cols() const { return u_block.cols() + (has_constant_column() ? 1 : 0); }

  /// Entry as it is displayed: K entries for U columns, the X-part for the
  /// constant column.
  LinDiffPoly entry(std::size_t r, std::size_t c) const;
  /// Aligned text table, columns labeled, rows in prolongation order.
  std::string to_text() const;
  std::string to_latex() const;
};

CoeffMatrix build_matrix(const PsSet& ps);

/// det of an L x L matrix whose first L-1 columns lie in K and whose last
/// column holds linear polynomials in X, by expansion along the last column.
LinDiffPoly det_with_polynomial_column(const KMatrix& left, const std::vector<LinDiffPoly>& last);

/// det M(L^h).
RatFunc dres_h(const DppeSystem& sys);
/// det M(L_gamma^h).
RatFunc dcres_h(const DppeSystem& sys);
/// det M(L), a linear polynomial in X.
LinDiffPoly dres(const DppeSystem& sys);
/// det M(L_gamma).
LinDiffPoly dcres(const DppeSystem& sys);

/// Rank of the L x (L-1) principal submatrix (the U block) of M(L) or M(L_gamma).
std::size_t principal_rank(const DppeSystem& sys, bool complete);

/// S (complete = false): entry (i,j) is the coefficient of u_{j,o_i} in F_i.
/// S_gamma (complete = true): the coefficient of u_{j,o_i-gamma_j}.
KMatrix s_matrix(const DppeSystem& sys, bool complete);
/// S with row i (0-based) removed.
KMatrix s_minor(const KMatrix& s, std::size_t i);

}  // namespace dres

#endif  // DRES_RESULTANT_HPP
