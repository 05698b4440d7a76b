#include "dres/resultant.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dres {

namespace {

bool is_complete(PsVariant v) { return v == PsVariant::Complete || v == PsVariant::CompleteHomogeneous; }

std::string row_label(int eq, int k, bool homogeneous) {
  std::string base = (homogeneous ? "H" : "F") + std::to_string(eq + 1);
  if (k == 0) return base;
  if (k == 1) return "d " + base;
  return "d^" + std::to_string(k) + " " + base;
}

}  // namespace

PsSet build_ps(const DppeSystem& sys, PsVariant variant) {
  PsSet ps;
  ps.variant = variant;
  const bool hom = ps.homogeneous();
  const bool complete = is_complete(variant);
  if (complete) {
    ps.gamma = gamma(sys);
  } else {
    ps.gamma.per_param.assign(static_cast<std::size_t>(sys.params()), 0);
  }
  const int g = ps.gamma.total;
  const int big_n = sys.total_order();
  const Decomposition dec = decompose(sys);

  for (int i = 0; i < sys.n(); ++i) {
    const int top = big_n - sys.order(i) - g - (hom ? 1 : 0);
    const LinDiffPoly& base = hom ? dec.h[static_cast<std::size_t>(i)] : dec.f[static_cast<std::size_t>(i)];
    std::vector<LinDiffPoly> chain;
    chain.reserve(static_cast<std::size_t>(std::max(top + 1, 0)));
    LinDiffPoly cur = base;
    for (int k = 0; k <= top; ++k) {
      if (k > 0) cur = differentiate(cur);
      chain.push_back(cur);
    }
    for (int k = top; k >= 0; --k) ps.entries.push_back({i, k, chain[static_cast<std::size_t>(k)]});
  }

  for (int j = 0; j < sys.params(); ++j) {
    const int max_order = big_n - ps.gamma.per_param[static_cast<std::size_t>(j)] - g - (hom ? 1 : 0);
    for (int m = 0; m <= max_order; ++m) ps.u_columns.push_back(Derivative::u(j + 1, m));
  }
  std::sort(ps.u_columns.begin(), ps.u_columns.end(),
            [](const Derivative& a, const Derivative& b) { return kRankOrderly.compare(a, b) > 0; });
  return ps;
}

CoeffMatrix build_matrix(const PsSet& ps) {
  CoeffMatrix m;
  const std::size_t rows = ps.entries.size();
  m.u_columns = ps.u_columns;
  m.u_block = KMatrix(rows, ps.u_columns.size());
  std::map<Derivative, std::size_t> col_of;
  for (std::size_t c = 0; c < ps.u_columns.size(); ++c) col_of[ps.u_columns[c]] = c;

  for (std::size_t r = 0; r < rows; ++r) {
    const PsEntry& e = ps.entries[r];
    m.row_labels.push_back(row_label(e.eq, e.k, ps.homogeneous()));
    for (const auto& [d, c] : e.poly.terms()) {
      if (d.kind != VarKind::U) continue;
      auto it = col_of.find(d);
      if (it == col_of.end()) {
        throw std::logic_error("prolongation " + m.row_labels.back() + " has a term " + d.to_string() +
                               " outside the column set");
      }
      m.u_block(r, it->second) = c;
    }
    if (!ps.homogeneous()) m.constant_column.push_back(e.poly.x_part());
  }
  return m;
}

LinDiffPoly CoeffMatrix::entry(std::size_t r, std::size_t c) const {
  if (c < u_block.cols()) return LinDiffPoly(u_block(r, c));
  return constant_column.at(r);
}

std::string CoeffMatrix::to_text() const {
  const std::size_t nr = rows();
  const std::size_t nc = cols();
  std::vector<std::vector<std::string>> cells(nr + 1, std::vector<std::string>(nc + 1));
  cells[0][0] = "";
  for (std::size_t c = 0; c < u_columns.size(); ++c) cells[0][c + 1] = u_columns[c].to_string();
  if (has_constant_column()) cells[0][nc] = "1";
  for (std::size_t r = 0; r < nr; ++r) {
    cells[r + 1][0] = row_labels[r];
    for (std::size_t c = 0; c < nc; ++c) cells[r + 1][c + 1] = entry(r, c).to_string();
  }
  std::vector<std::size_t> width(nc + 1, 0);
  for (const auto& row : cells) {
    for (std::size_t c = 0; c <= nc; ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream out;
  for (const auto& row : cells) {
    for (std::size_t c = 0; c <= nc; ++c) {
      out << std::string(width[c] - row[c].size(), ' ') << row[c] << (c == nc ? "\n" : "  ");
    }
  }
  return out.str();
}

std::string CoeffMatrix::to_latex() const {
  std::ostringstream out;
  out << "\\left[\\begin{array}{" << std::string(cols(), 'c') << "}\n";
  for (std::size_t r = 0; r < rows(); ++r) {
    for (std::size_t c = 0; c < cols(); ++c) {
      out << entry(r, c).to_latex() << (c + 1 == cols() ? " \\\\\n" : " & ");
    }
  }
  out << "\\end{array}\\right]";
  return out.str();
}

LinDiffPoly det_with_polynomial_column(const KMatrix& left, const std::vector<LinDiffPoly>& last) {
  const std::size_t n = left.rows();
  if (left.cols() + 1 != n || last.size() != n) {
    throw std::invalid_argument("det_with_polynomial_column: shape mismatch");
  }
  LinDiffPoly acc;
  if (rank_exact(left) < left.cols()) return acc;
  for (std::size_t r = 0; r < n; ++r) {
    if (last[r].is_zero()) continue;
    RatFunc minor = det_exact(left.without({r}, {}));
    if (minor.is_zero()) continue;
    // Cofactor sign (-1)^(r + n - 1) for 0-based row r, last column n-1.
    if ((r + n - 1) % 2 == 1) minor = -minor;
    acc += last[r].scaled(minor);
  }
  return acc;
}

namespace {

RatFunc homogeneous_det(const DppeSystem& sys, PsVariant v) {
  return det_exact(build_matrix(build_ps(sys, v)).u_block);
}

LinDiffPoly full_det(const DppeSystem& sys, PsVariant v) {
  CoeffMatrix m = build_matrix(build_ps(sys, v));
  return det_with_polynomial_column(m.u_block, m.constant_column);
}

}  // namespace

RatFunc dres_h(const DppeSystem& sys) { return homogeneous_det(sys, PsVariant::Homogeneous); }
RatFunc dcres_h(const DppeSystem& sys) { return homogeneous_det(sys, PsVariant::CompleteHomogeneous); }
LinDiffPoly dres(const DppeSystem& sys) { return full_det(sys, PsVariant::Full); }
LinDiffPoly dcres(const DppeSystem& sys) { return full_det(sys, PsVariant::Complete); }

std::size_t principal_rank(const DppeSystem& sys, bool complete) {
  return rank_exact(build_matrix(build_ps(sys, complete ? PsVariant::Complete : PsVariant::Full)).u_block);
}

KMatrix s_matrix(const DppeSystem& sys, bool complete) {
  const GammaData g = complete ? gamma(sys) : GammaData{std::vector<int>(static_cast<std::size_t>(sys.params()), 0), 0};
  KMatrix s(static_cast<std::size_t>(sys.n()), static_cast<std::size_t>(sys.params()));
  for (int i = 0; i < sys.n(); ++i) {
    for (int j = 0; j < sys.params(); ++j) {
      const int k = sys.order(i) - g.per_param[static_cast<std::size_t>(j)];
      s(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = sys.op(i, j).coeff(k);
    }
  }
  return s;
}

KMatrix s_minor(const KMatrix& s, std::size_t i) { return s.without({i}, {}); }

}  // namespace dres
