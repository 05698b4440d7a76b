#ifndef DRES_LINALG_HPP
#define DRES_LINALG_HPP

#include "dres/ratfunc.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace dres {

/// Row-major dense matrix with value semantics.
template <typename T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  /// Copy with the listed rows and columns removed (indices are 0-based).
  DenseMatrix without(const std::vector<std::size_t>& drop_rows,
                      const std::vector<std::size_t>& drop_cols) const {
    std::vector<bool> keep_r(rows_, true), keep_c(cols_, true);
    for (auto r : drop_rows) keep_r.at(r) = false;
    for (auto c : drop_cols) keep_c.at(c) = false;
    std::size_t nr = 0, nc = 0;
    for (bool k : keep_r) nr += k;
    for (bool k : keep_c) nc += k;
    DenseMatrix out(nr, nc);
    std::size_t rr = 0;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (!keep_r[r]) continue;
      std::size_t cc = 0;
      for (std::size_t c = 0; c < cols_; ++c) {
        if (!keep_c[c]) continue;
        out(rr, cc++) = (*this)(r, c);
      }
      ++rr;
    }
    return out;
  }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using KMatrix = DenseMatrix<RatFunc>;

/// Exact determinant over Q(t). Each row is scaled to Q[t] entries, the
/// result is eliminated fraction-free (Bareiss) and the row scalings are
/// divided out at the end. The empty matrix has determinant 1.
RatFunc det_exact(const KMatrix& m);

/// Exact rank, via the same fraction-free elimination.
std::size_t rank_exact(const KMatrix& m);

/// Reduced row echelon form over Q(t). `pivots` receives the pivot column
/// of each nonzero row, in row order; zero rows are dropped.
KMatrix rref(KMatrix m, std::vector<std::size_t>* pivots = nullptr);

/// Unique solution of a square system, or nullopt when it is singular.
std::optional<std::vector<RatFunc>> solve_unique(const KMatrix& a, const std::vector<RatFunc>& b);

}  // namespace dres

#endif  // DRES_LINALG_HPP
