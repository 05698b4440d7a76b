#ifndef DRES_DIFFPOLY_HPP
#define DRES_DIFFPOLY_HPP

#include "dres/oreop.hpp"
#include "dres/ratfunc.hpp"

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dres {

enum class VarKind { X, U };

/// The derivative y_k of a differential indeterminate x_i or u_j.
/// Indices are 1-based, as in x1..xn and u1..u(n-1).
struct Derivative {
  VarKind kind = VarKind::X;
  int index = 1;
  int order = 0;

  static Derivative x(int i, int k = 0) { return {VarKind::X, i, k}; }
  static Derivative u(int j, int k = 0) { return {VarKind::U, j, k}; }

  bool same_variable(const Derivative& o) const { return kind == o.kind && index == o.index; }
  /// `x1`, `u2''`, `d(x3,4)`.
  std::string to_string() const;
  /// `x_{1}`, `u_{22}`, following the x_{ik} subscript convention.
  std::string to_latex() const;
  std::string variable_name() const;

  friend auto operator<=>(const Derivative&, const Derivative&) = default;
};

/// Total orders on derivatives. The constant monomial ranks below every
/// derivative in all three.
enum class RankingKind {
  /// Order first; at equal order U above X, u_{n-1} > ... > u_1, x_1 > ... > x_n.
  OrderlyU,
  /// R: every X-derivative above every U-derivative.
  EliminateX,
  /// R*: every U-derivative above every X-derivative.
  EliminateU,
};

struct Ranking {
  RankingKind kind = RankingKind::EliminateU;
  /// Negative, zero or positive as a ranks below, equal to, or above b.
  int compare(const Derivative& a, const Derivative& b) const;
  bool less(const Derivative& a, const Derivative& b) const { return compare(a, b) < 0; }
};

inline constexpr Ranking kRankR{RankingKind::EliminateX};
inline constexpr Ranking kRankRStar{RankingKind::EliminateU};
inline constexpr Ranking kRankOrderly{RankingKind::OrderlyU};

/// Differential polynomial of degree at most one in K{X u U}: a K-linear
/// combination of derivatives plus a constant in K.
class LinDiffPoly {
 public:
  LinDiffPoly() = default;
  LinDiffPoly(const RatFunc& constant) : constant_(constant) {}  // NOLINT(google-explicit-constructor)
  static LinDiffPoly var(const Derivative& d, const RatFunc& c = RatFunc(1));

  const std::map<Derivative, RatFunc>& terms() const { return terms_; }
  const RatFunc& constant() const { return constant_; }
  const RatFunc& coeff(const Derivative& d) const;
  bool is_zero() const { return terms_.empty() && constant_.is_zero(); }
  bool has_kind(VarKind kind) const;

  void add_term(const Derivative& d, const RatFunc& c);
  void add_constant(const RatFunc& c) { constant_ += c; }

  LinDiffPoly operator-() const;
  LinDiffPoly& operator+=(const LinDiffPoly& o);
  LinDiffPoly& operator-=(const LinDiffPoly& o);
  friend LinDiffPoly operator+(LinDiffPoly a, const LinDiffPoly& b) { return a += b; }
  friend LinDiffPoly operator-(LinDiffPoly a, const LinDiffPoly& b) { return a -= b; }
  friend bool operator==(const LinDiffPoly&, const LinDiffPoly&) = default;
  /// c * this.
  LinDiffPoly scaled(const RatFunc& c) const;

  /// Highest derivative present in the given ranking; nullopt when constant.
  std::optional<Derivative> lead(const Ranking& ranking = kRankRStar) const;
  /// Terms sorted by decreasing rank.
  std::vector<std::pair<Derivative, RatFunc>> sorted_terms(const Ranking& ranking = kRankRStar) const;
  /// The part involving only X-derivatives and the constant.
  LinDiffPoly x_part() const;
  /// The part involving only U-derivatives.
  LinDiffPoly u_part() const;

  /// Grammar-style text, terms in decreasing R* order, constant last.
  std::string to_string() const;
  std::string to_latex() const;

 private:
  std::map<Derivative, RatFunc> terms_;
  RatFunc constant_;
};

/// Highest order of the variable (kind, index) in p, or -1 when absent.
int ord(const LinDiffPoly& p, VarKind kind, int index);

/// Formal derivative applied `times` times: c*y_k -> c'*y_k + c*y_{k+1}.
LinDiffPoly differentiate(const LinDiffPoly& p, int times = 1);

/// sum_k c_k d^k(p) for op = sum_k c_k d^k.
LinDiffPoly apply(const OreOp& op, const LinDiffPoly& p);
/// sum_k c_k u_{j,k}.
LinDiffPoly apply(const OreOp& op, int j);

/// A system is malformed (missing parameter, constant row, ...).
class InvalidSystem : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// n linear DPPEs x_i = a_i - sum_j L_ij(u_j) in n-1 parameters.
///
/// Indices i, j in this interface are 0-based. Every parameter column must
/// hold a nonzero operator and every row must hold a nonzero operator.
class DppeSystem {
 public:
  DppeSystem(std::vector<RatFunc> a, std::vector<std::vector<OreOp>> ops);

  int n() const { return static_cast<int>(a_.size()); }
  int params() const { return n() - 1; }
  const RatFunc& a(int i) const { return a_.at(static_cast<std::size_t>(i)); }
  const OreOp& op(int i, int j) const { return ops_.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(j)); }
  const std::vector<RatFunc>& constants() const { return a_; }
  const std::vector<std::vector<OreOp>>& ops() const { return ops_; }

  /// o_i: the highest d-degree in row i.
  int order(int i) const { return orders_.at(static_cast<std::size_t>(i)); }
  /// N = sum o_i.
  int total_order() const { return total_order_; }

  /// Every L_ij has coefficients in Q.
  bool has_constant_coefficients() const;

  friend bool operator==(const DppeSystem&, const DppeSystem&) = default;

 private:
  std::vector<RatFunc> a_;
  std::vector<std::vector<OreOp>> ops_;
  std::vector<int> orders_;
  int total_order_ = 0;
};

/// F_i = T_i + H_i with T_i = x_i - a_i and H_i = sum_j L_ij(u_j).
struct Decomposition {
  std::vector<LinDiffPoly> f;
  std::vector<LinDiffPoly> h;
  std::vector<LinDiffPoly> t;
};
Decomposition decompose(const DppeSystem& sys);

/// gamma_j = min_i (o_i - ord(F_i, u_j)) and gamma = sum_j gamma_j.
struct GammaData {
  std::vector<int> per_param;
  int total = 0;
};
GammaData gamma(const DppeSystem& sys);

/// Reduction of p by a chain of linear polynomials whose leads (w.r.t. R*)
/// have coefficients in K. The result contains no derivative of any chain
/// lead. Initials lie in K, so no pseudo-multiplication is needed.
LinDiffPoly prem_linear(const LinDiffPoly& p, const std::vector<LinDiffPoly>& chain);

}  // namespace dres

#endif  // DRES_DIFFPOLY_HPP
