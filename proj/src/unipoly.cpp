#include "dres/unipoly.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace dres {

namespace {

const Rational& zero_rational() {
  static const Rational zero(0);
  return zero;
}

}  // namespace

UniPoly::UniPoly(int c) {
  if (c != 0) coeffs_.emplace_back(c);
}

UniPoly::UniPoly(const Rational& c) {
  if (sgn(c) != 0) coeffs_.push_back(c);
}

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

UniPoly UniPoly::monomial(const Rational& c, int exponent) {
  UniPoly p;
  if (sgn(c) == 0) return p;
  p.coeffs_.assign(static_cast<std::size_t>(exponent) + 1, Rational(0));
  p.coeffs_.back() = c;
  return p;
}

bool UniPoly::is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

const Rational& UniPoly::coeff(int exponent) const {
  if (exponent < 0 || exponent > degree()) return zero_rational();
  return coeffs_[static_cast<std::size_t>(exponent)];
}

const Rational& UniPoly::leading() const {
  return is_zero() ? zero_rational() : coeffs_.back();
}

void UniPoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  UniPoly r;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  Rational tmp;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpq_mul(tmp.get_mpq_t(), a.coeffs_[i].get_mpq_t(), b.coeffs_[j].get_mpq_t());
      r.coeffs_[i + j] += tmp;
    }
  }
  r.trim();
  return r;
}

UniPoly& UniPoly::operator*=(const UniPoly& o) {
  *this = *this * o;
  return *this;
}

UniPoly& UniPoly::scale(const Rational& c) {
  if (sgn(c) == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw ArithmeticError("polynomial division by zero");
  UniPoly q;
  UniPoly r = a;
  const int db = b.degree();
  if (r.degree() < db) return {q, r};
  q.coeffs_.assign(static_cast<std::size_t>(r.degree() - db) + 1, Rational(0));
  const Rational inv_lc = 1 / b.leading();
  while (!r.is_zero() && r.degree() >= db) {
    const int shift = r.degree() - db;
    Rational c = r.leading() * inv_lc;
    for (int i = 0; i <= db; ++i) {
      r.coeffs_[static_cast<std::size_t>(i + shift)] -= c * b.coeffs_[static_cast<std::size_t>(i)];
    }
    q.coeffs_[static_cast<std::size_t>(shift)] = c;
    r.trim();
  }
  q.trim();
  return {q, r};
}

UniPoly UniPoly::exact_div(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw ArithmeticError("inexact polynomial division");
  return q;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return UniPoly();
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return UniPoly(std::move(d));
}

Rational UniPoly::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly UniPoly::monic() const {
  if (is_zero() || leading() == 1) return *this;
  UniPoly r = *this;
  r.scale(1 / leading());
  return r;
}

namespace {

// Integer polynomials for the gcd kernel, indexed by exponent, no zero lead.
using ZPoly = std::vector<Integer>;

void ztrim(ZPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

void make_primitive(ZPoly& p) {
  Integer g;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  if (sgn(p.back()) < 0) g = -g;
  if (g != 1) {
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
}

ZPoly to_primitive(const UniPoly& a) {
  Integer l(1);
  for (const auto& c : a.coefficients()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  ZPoly out;
  out.reserve(a.coefficients().size());
  for (const auto& c : a.coefficients()) out.push_back(c.get_num() * (l / c.get_den()));
  make_primitive(out);
  return out;
}

UniPoly to_monic(const ZPoly& p) {
  std::vector<Rational> c(p.begin(), p.end());
  return UniPoly(std::move(c)).monic();
}

Integer max_norm(const ZPoly& p) {
  Integer m;
  for (const auto& c : p) {
    if (mpz_cmpabs(c.get_mpz_t(), m.get_mpz_t()) > 0) m = abs(c);
  }
  return m;
}

// Does b divide a over Z? b is primitive, so this agrees with Q[t].
bool divides(const ZPoly& b, ZPoly a) {
  const std::size_t db = b.size() - 1;
  Integer q;
  while (!a.empty() && a.size() - 1 >= db) {
    if (!mpz_divisible_p(a.back().get_mpz_t(), b.back().get_mpz_t())) return false;
    mpz_divexact(q.get_mpz_t(), a.back().get_mpz_t(), b.back().get_mpz_t());
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) a[i + shift] -= q * b[i];
    ztrim(a);
  }
  return a.empty();
}

// Heuristic gcd: the integer gcd of the values at a large point, read
// back in base xi with symmetric digits, is the gcd whenever it divides both.
std::optional<ZPoly> gcd_heuristic(const ZPoly& a, const ZPoly& b) {
  Integer xi = 2 * std::min(max_norm(a), max_norm(b)) + 29;
  const std::size_t deg = std::max(a.size(), b.size());
  for (int attempt = 0; attempt < 6; ++attempt) {
    if (mpz_sizeinbase(xi.get_mpz_t(), 2) * deg > 400000) return std::nullopt;
    auto eval = [&](const ZPoly& p) {
      Integer v;
      for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * xi + *it;
      return v;
    };
    Integer gamma;
    const Integer va = eval(a);
    const Integer vb = eval(b);
    mpz_gcd(gamma.get_mpz_t(), va.get_mpz_t(), vb.get_mpz_t());
    ZPoly g;
    const Integer half = xi / 2;
    while (sgn(gamma) != 0) {
      Integer digit;
      mpz_fdiv_r(digit.get_mpz_t(), gamma.get_mpz_t(), xi.get_mpz_t());
      if (digit > half) digit -= xi;
      g.push_back(digit);
      gamma = (gamma - digit) / xi;
    }
    ztrim(g);
    if (!g.empty()) {
      make_primitive(g);
      if (divides(g, a) && divides(g, b)) return g;
    }
    xi = xi * 73794 / 27011;
  }
  return std::nullopt;
}

// Primitive remainder sequence; slow but always succeeds.
ZPoly gcd_prs(ZPoly a, ZPoly b) {
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    ZPoly r = a;
    const std::size_t db = b.size() - 1;
    while (!r.empty() && r.size() - 1 >= db) {
      const Integer lr = r.back();
      const std::size_t shift = r.size() - 1 - db;
      for (auto& c : r) c *= b.back();
      for (std::size_t i = 0; i <= db; ++i) r[i + shift] -= lr * b[i];
      ztrim(r);
    }
    if (!r.empty()) make_primitive(r);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace

UniPoly gcd(UniPoly a, UniPoly b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return UniPoly(1);
  const ZPoly za = to_primitive(a);
  const ZPoly zb = to_primitive(b);
  if (auto g = gcd_heuristic(za, zb)) return to_monic(*g);
  return to_monic(gcd_prs(za, zb));
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

namespace {

// Writes a polynomial term by term with descending exponents. `power`
// formats t^k for the requested notation.
template <typename PowerFmt, typename CoeffFmt>
std::string render(const std::vector<Rational>& coeffs, PowerFmt power, CoeffFmt coeff_fmt,
                   const char* times) {
  if (coeffs.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k) {
    const Rational& c = coeffs[static_cast<std::size_t>(k)];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (sgn(c) < 0) {
      out << "-";
    } else if (!first) {
      out << "+";
    }
    first = false;
    if (k == 0) {
      out << coeff_fmt(mag);
      continue;
    }
    if (mag != 1) out << coeff_fmt(mag) << times;
    out << power(k);
  }
  return out.str();
}

}  // namespace

std::string UniPoly::to_string() const {
  return render(
      coeffs_, [](int k) { return k == 1 ? std::string("t") : "t^" + std::to_string(k); },
      [](const Rational& q) { return q.get_str(); }, "*");
}

std::string UniPoly::to_latex() const {
  return render(
      coeffs_, [](int k) { return k == 1 ? std::string("t") : "t^{" + std::to_string(k) + "}"; },
      [](const Rational& q) {
        if (q.get_den() == 1) return q.get_num().get_str();
        return "\\frac{" + q.get_num().get_str() + "}{" + q.get_den().get_str() + "}";
      },
      " ");
}

}  // namespace dres
