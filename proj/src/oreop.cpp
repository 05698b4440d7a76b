#include "dres/oreop.hpp"

#include "dres/linalg.hpp"

#include <stdexcept>

namespace dres {

namespace {

const RatFunc& zero_coeff() {
  static const RatFunc zero;
  return zero;
}

// d * p, by the rule d*c = c*d + c'.
OreOp shift_left_by_d(const OreOp& p) {
  if (p.is_zero()) return p;
  std::vector<RatFunc> out(p.coefficients().size() + 1);
  for (int k = 0; k <= p.degree(); ++k) {
    const RatFunc& c = p.coeff(k);
    if (c.is_zero()) continue;
    out[static_cast<std::size_t>(k)] += c.derive();
    out[static_cast<std::size_t>(k) + 1] += c;
  }
  return OreOp(std::move(out));
}

}  // namespace

OreOp::OreOp(const RatFunc& c) {
  if (!c.is_zero()) coeffs_.push_back(c);
}

OreOp::OreOp(std::vector<RatFunc> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

OreOp OreOp::monomial(const RatFunc& c, int k) {
  OreOp r;
  if (c.is_zero()) return r;
  r.coeffs_.assign(static_cast<std::size_t>(k) + 1, RatFunc());
  r.coeffs_.back() = c;
  return r;
}

void OreOp::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const RatFunc& OreOp::coeff(int k) const {
  if (k < 0 || k > degree()) return zero_coeff();
  return coeffs_[static_cast<std::size_t>(k)];
}

const RatFunc& OreOp::leading() const { return is_zero() ? zero_coeff() : coeffs_.back(); }

bool OreOp::has_constant_coefficients() const {
  for (const auto& c : coeffs_) {
    if (!c.is_constant()) return false;
  }
  return true;
}

OreOp OreOp::operator-() const {
  OreOp r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

OreOp& OreOp::operator+=(const OreOp& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

OreOp& OreOp::operator-=(const OreOp& o) { return *this += -o; }

OreOp OreOp::scaled(const RatFunc& c) const {
  if (c.is_zero()) return OreOp();
  OreOp r = *this;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

OreOp OreOp::monic() const {
  if (is_zero() || leading().is_one()) return *this;
  return scaled(leading().inverse());
}

RatFunc OreOp::apply_to(const RatFunc& f) const {
  RatFunc acc;
  RatFunc deriv = f;
  for (int k = 0; k <= degree(); ++k) {
    if (k > 0) deriv = deriv.derive();
    if (!coeff(k).is_zero()) acc += coeff(k) * deriv;
  }
  return acc;
}

std::string OreOp::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const RatFunc& c = coeff(k);
    if (c.is_zero()) continue;
    std::string dpow = k == 0 ? "" : (k == 1 ? "d" : "d^" + std::to_string(k));
    std::string cs = c.to_string();
    bool negative = cs[0] == '-' && c.is_single_term();
    if (negative) cs.erase(0, 1);
    std::string term;
    if (k == 0) {
      term = c.is_single_term() ? cs : "(" + cs + ")";
    } else if (c.is_one() || (negative && cs == "1")) {
      term = dpow;
    } else {
      term = (c.is_single_term() ? cs : "(" + cs + ")") + "*" + dpow;
    }
    if (negative) {
      out += "-" + term;
    } else {
      out += (out.empty() ? "" : "+") + term;
    }
  }
  return out;
}

OreOp ore_mul(const OreOp& a, const OreOp& b) {
  if (a.is_zero() || b.is_zero()) return OreOp();
  OreOp acc;
  OreOp dib = b;  // d^i * b
  for (int i = 0; i <= a.degree(); ++i) {
    if (i > 0) dib = shift_left_by_d(dib);
    if (!a.coeff(i).is_zero()) acc += dib.scaled(a.coeff(i));
  }
  return acc;
}

std::pair<OreOp, OreOp> right_divmod(const OreOp& a, const OreOp& b) {
  if (b.is_zero()) throw ArithmeticError("right division by the zero operator");
  OreOp q;
  OreOp r = a;
  const RatFunc inv_lc = b.leading().inverse();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    const int shift = r.degree() - b.degree();
    // (c d^s) * b has leading coefficient c * lc(b).
    OreOp term = OreOp::monomial(r.leading() * inv_lc, shift);
    q += term;
    OreOp sub = ore_mul(term, b);
    r -= sub;
    // Guard against a leading term that failed to cancel exactly.
    if (r.degree() >= shift + b.degree()) throw std::logic_error("right_divmod: leading term did not cancel");
  }
  return {q, r};
}

OreOp right_div_exact(const OreOp& a, const OreOp& g) {
  auto [q, r] = right_divmod(a, g);
  if (!r.is_zero()) {
    throw ArithmeticError("operator " + g.to_string() + " does not right-divide " + a.to_string());
  }
  return q;
}

OreOp gcrd(const OreOp& a, const OreOp& b) {
  OreOp x = a.monic();
  OreOp y = b.monic();
  if (x.is_zero() && y.is_zero()) throw ArithmeticError("gcrd of zero operators");
  while (!y.is_zero()) {
    OreOp r = right_divmod(x, y).second.monic();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

OreOp gcrd(std::span<const OreOp> ops) {
  OreOp g;
  for (const auto& op : ops) {
    if (op.is_zero()) continue;
    g = g.is_zero() ? op.monic() : gcrd(g, op);
  }
  if (g.is_zero()) throw ArithmeticError("gcrd of zero operators");
  return g;
}

std::pair<OreOp, OreOp> commutator_correction(const OreOp& l1, const OreOp& l2) {
  if (l1.is_zero() || l2.is_zero()) throw std::invalid_argument("commutator_correction: zero operator");
  const OreOp comm = ore_mul(l1, l2) - ore_mul(l2, l1);
  if (comm.is_zero()) return {OreOp(), OreOp()};
  const int o1 = l1.degree();
  const int o2 = l2.degree();
  const int n = o1 + o2;
  if (comm.degree() >= n) throw std::logic_error("commutator has unexpected degree");

  // Column i < o1 holds d^i*l2 (unknown alpha_i of d1); column o1+j holds
  // -(d^j*l1) (unknown beta_j of d2). Row k is the coefficient of d^k.
  KMatrix sys(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  OreOp shifted = l2;
  for (int i = 0; i < o1; ++i) {
    if (i > 0) shifted = ore_mul(OreOp::d(), shifted);
    for (int k = 0; k < n; ++k) sys(static_cast<std::size_t>(k), static_cast<std::size_t>(i)) = shifted.coeff(k);
  }
  shifted = l1;
  for (int j = 0; j < o2; ++j) {
    if (j > 0) shifted = ore_mul(OreOp::d(), shifted);
    for (int k = 0; k < n; ++k) {
      sys(static_cast<std::size_t>(k), static_cast<std::size_t>(o1 + j)) = -shifted.coeff(k);
    }
  }
  std::vector<RatFunc> rhs(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) rhs[static_cast<std::size_t>(k)] = comm.coeff(k);

  auto sol = solve_unique(sys, rhs);
  if (!sol) {
    throw std::logic_error("commutator_correction: singular system; operators " + l1.to_string() +
                           " and " + l2.to_string() + " are not right-coprime");
  }
  std::vector<RatFunc> a(sol->begin(), sol->begin() + o1);
  std::vector<RatFunc> b(sol->begin() + o1, sol->end());
  return {OreOp(std::move(a)), OreOp(std::move(b))};
}

}  // namespace dres
