#include "dres/linalg.hpp"

#include <utility>

namespace dres {

namespace {

UniPoly lcm(const UniPoly& a, const UniPoly& b) {
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  return UniPoly::exact_div(a * b, gcd(a, b));
}

// Clears denominators row by row. Returns the polynomial matrix and the
// product of the row multipliers.
DenseMatrix<UniPoly> to_polynomial_rows(const KMatrix& m, UniPoly* scale) {
  DenseMatrix<UniPoly> p(m.rows(), m.cols());
  UniPoly total(1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    UniPoly row_lcm(1);
    for (std::size_t c = 0; c < m.cols(); ++c) row_lcm = lcm(row_lcm, m(r, c).den());
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const RatFunc& e = m(r, c);
      if (e.is_zero()) continue;
      p(r, c) = e.den().is_one() ? e.num() * row_lcm
                                 : e.num() * UniPoly::exact_div(row_lcm, e.den());
    }
    total *= row_lcm;
  }
  if (scale) *scale = std::move(total);
  return p;
}

// Fraction-free elimination on a polynomial matrix. Returns the rank; when
// the matrix is square and nonsingular `det` receives its determinant.
std::size_t bareiss(DenseMatrix<UniPoly>& a, UniPoly* det) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  UniPoly prev(1);
  int sign = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    // Prefer the pivot of lowest degree to slow coefficient growth.
    std::size_t best = rows;
    for (std::size_t r = rank; r < rows; ++r) {
      if (a(r, col).is_zero()) continue;
      if (best == rows || a(r, col).degree() < a(best, col).degree()) best = r;
    }
    if (best == rows) {
      if (det && rows == cols) {
        *det = UniPoly();
        return rank;
      }
      continue;
    }
    piv = best;
    if (piv != rank) {
      a.swap_rows(piv, rank);
      sign = -sign;
    }
    const UniPoly& p = a(rank, col);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const UniPoly f = a(r, col);
      for (std::size_t c = col + 1; c < cols; ++c) {
        UniPoly v = p * a(r, c);
        if (!f.is_zero() && !a(rank, c).is_zero()) v -= f * a(rank, c);
        a(r, c) = prev.is_one() ? std::move(v) : UniPoly::exact_div(v, prev);
      }
      a(r, col) = UniPoly();
    }
    prev = a(rank, col);
    ++rank;
  }
  if (det) {
    if (rows == cols && rank == rows) {
      *det = rows == 0 ? UniPoly(1) : a(rows - 1, cols - 1);
      if (sign < 0) *det = -*det;
    } else {
      *det = UniPoly();
    }
  }
  return rank;
}

}  // namespace

RatFunc det_exact(const KMatrix& m) {
  if (m.rows() != m.cols()) throw ArithmeticError("determinant of a non-square matrix");
  if (m.rows() == 0) return RatFunc(1);
  UniPoly scale;
  auto p = to_polynomial_rows(m, &scale);
  UniPoly det;
  bareiss(p, &det);
  if (det.is_zero()) return RatFunc();
  return RatFunc(det, scale);
}

std::size_t rank_exact(const KMatrix& m) {
  auto p = to_polynomial_rows(m, nullptr);
  return bareiss(p, nullptr);
}

// Fraction-free Gauss-Jordan: after each step every pivot row carries the
// same diagonal entry, and each update divides exactly by the previous one.
KMatrix rref(KMatrix m, std::vector<std::size_t>* pivots) {
  auto a = to_polynomial_rows(m, nullptr);
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::vector<std::size_t> piv_cols;
  UniPoly prev(1);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t best = rows;
    for (std::size_t r = rank; r < rows; ++r) {
      if (a(r, col).is_zero()) continue;
      if (best == rows || a(r, col).degree() < a(best, col).degree()) best = r;
    }
    if (best == rows) continue;
    a.swap_rows(best, rank);
    const UniPoly p = a(rank, col);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank) continue;
      const UniPoly f = a(r, col);
      for (std::size_t c = 0; c < cols; ++c) {
        if (c == col) continue;
        UniPoly v = a(r, c).is_zero() ? UniPoly() : p * a(r, c);
        if (!f.is_zero() && !a(rank, c).is_zero()) v -= f * a(rank, c);
        a(r, c) = prev.is_one() || v.is_zero() ? std::move(v) : UniPoly::exact_div(v, prev);
      }
      a(r, col) = UniPoly();
    }
    prev = p;
    piv_cols.push_back(col);
    ++rank;
  }
  KMatrix out(rank, cols);
  for (std::size_t r = 0; r < rank; ++r) {
    const UniPoly& d = a(r, piv_cols[r]);
    for (std::size_t c = 0; c < cols; ++c) {
      if (!a(r, c).is_zero()) out(r, c) = RatFunc(a(r, c), d);
    }
  }
  if (pivots) *pivots = std::move(piv_cols);
  return out;
}

std::optional<std::vector<RatFunc>> solve_unique(const KMatrix& a, const std::vector<RatFunc>& b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n) throw ArithmeticError("solve_unique: dimension mismatch");
  KMatrix aug(n, n + 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n) = b[r];
  }
  std::vector<std::size_t> piv;
  KMatrix e = rref(std::move(aug), &piv);
  if (piv.size() != n) return std::nullopt;
  for (std::size_t i = 0; i < n; ++i) {
    if (piv[i] != i) return std::nullopt;
  }
  std::vector<RatFunc> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = e(i, n);
  return x;
}

}  // namespace dres
