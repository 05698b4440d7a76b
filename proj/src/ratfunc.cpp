#include "dres/ratfunc.hpp"

namespace dres {

namespace {

int term_count(const UniPoly& p) {
  int n = 0;
  for (const auto& c : p.coefficients()) n += sgn(c) != 0;
  return n;
}

}  // namespace

RatFunc::RatFunc(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw ArithmeticError("rational function with zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = UniPoly(1);
    return;
  }
  if (!den_.is_constant()) {
    UniPoly g = gcd(num_, den_);
    if (!g.is_one()) {
      num_ = UniPoly::exact_div(num_, g);
      den_ = UniPoly::exact_div(den_, g);
    }
  }
  const Rational lc = den_.leading();
  if (lc != 1) {
    const Rational inv = 1 / lc;
    num_.scale(inv);
    den_.scale(inv);
  }
}

Rational RatFunc::constant_value() const {
  if (!is_constant()) throw ArithmeticError("rational function is not a constant: " + to_string());
  return num_.coeff(0);
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw ArithmeticError("inverse of zero rational function");
  return RatFunc(den_, num_);
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (den_.is_one()) {
      if (num_.is_zero()) den_ = UniPoly(1);
      return *this;
    }
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero() || o.is_zero()) {
    *this = RatFunc();
    return *this;
  }
  if (den_.is_one() && o.den_.is_one()) {
    num_ *= o.num_;
    return *this;
  }
  // Cross-cancel first so the products stay reduced.
  UniPoly g1 = gcd(num_, o.den_);
  UniPoly g2 = gcd(o.num_, den_);
  UniPoly n = UniPoly::exact_div(num_, g1) * UniPoly::exact_div(o.num_, g2);
  UniPoly d = UniPoly::exact_div(den_, g2) * UniPoly::exact_div(o.den_, g1);
  num_ = std::move(n);
  den_ = std::move(d);
  const Rational lc = den_.leading();
  if (lc != 1) {
    num_.scale(1 / lc);
    den_.scale(1 / lc);
  }
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

RatFunc RatFunc::derive() const {
  if (den_.is_one()) return RatFunc(num_.derivative());
  return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RatFunc RatFunc::derive(int times) const {
  RatFunc r = *this;
  for (int i = 0; i < times && !r.is_zero(); ++i) r = r.derive();
  return r;
}

Rational RatFunc::eval_at(const Rational& t0) const {
  const Rational d = den_.eval(t0);
  if (sgn(d) == 0) {
    throw PoleError("pole at t = " + t0.get_str() + ": denominator " + den_.to_string() +
                    " vanishes");
  }
  return num_.eval(t0) / d;
}

bool RatFunc::is_single_term() const { return den_.is_one() && term_count(num_) <= 1; }

std::string RatFunc::to_string() const {
  if (den_.is_one()) return num_.to_string();
  std::string n = num_.to_string();
  if (term_count(num_) > 1) n = "(" + n + ")";
  std::string d = den_.to_string();
  if (term_count(den_) > 1) d = "(" + d + ")";
  return n + "/" + d;
}

std::string RatFunc::to_latex() const {
  if (den_.is_one()) return num_.to_latex();
  return "\\frac{" + num_.to_latex() + "}{" + den_.to_latex() + "}";
}

}  // namespace dres
