#include "dres/diffpoly.hpp"

#include <algorithm>
#include <limits>

namespace dres {

namespace {

const RatFunc& zero_coeff() {
  static const RatFunc zero;
  return zero;
}

int cmp(int a, int b) { return (a > b) - (a < b); }

// Within a single namespace: U is orderly with u_{n-1} > ... > u_1; X puts
// every derivative of x_1 above x_2 and so on.
int compare_same_kind(const Derivative& a, const Derivative& b) {
  if (a.kind == VarKind::U) {
    if (a.order != b.order) return cmp(a.order, b.order);
    return cmp(a.index, b.index);
  }
  if (a.index != b.index) return cmp(b.index, a.index);
  return cmp(a.order, b.order);
}

std::string coeff_times(const RatFunc& c, const std::string& var) {
  if (c.is_one()) return var;
  if (c == RatFunc(-1)) return "-" + var;
  if (c.is_single_term()) return c.to_string() + "*" + var;
  return "(" + c.to_string() + ")*" + var;
}

std::string coeff_times_latex(const RatFunc& c, const std::string& var) {
  if (c.is_one()) return var;
  if (c == RatFunc(-1)) return "-" + var;
  if (c.is_single_term()) return c.to_latex() + " " + var;
  return "\\left(" + c.to_latex() + "\\right) " + var;
}

std::string join_terms(const std::vector<std::string>& parts) {
  if (parts.empty()) return "0";
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) {
    if (!parts[i].empty() && parts[i][0] == '-') {
      out += parts[i];
    } else {
      out += "+" + parts[i];
    }
  }
  return out;
}

}  // namespace

std::string Derivative::variable_name() const {
  return (kind == VarKind::X ? "x" : "u") + std::to_string(index);
}

std::string Derivative::to_string() const {
  if (order <= 2) return variable_name() + std::string(static_cast<std::size_t>(order), '\'');
  return "d(" + variable_name() + "," + std::to_string(order) + ")";
}

std::string Derivative::to_latex() const {
  std::string sub = std::to_string(index);
  if (order > 0) sub += (index >= 10 || order >= 10 ? "," : "") + std::to_string(order);
  return std::string(kind == VarKind::X ? "x" : "u") + "_{" + sub + "}";
}

int Ranking::compare(const Derivative& a, const Derivative& b) const {
  switch (kind) {
    case RankingKind::EliminateU:
      if (a.kind != b.kind) return a.kind == VarKind::U ? 1 : -1;
      return compare_same_kind(a, b);
    case RankingKind::EliminateX:
      if (a.kind != b.kind) return a.kind == VarKind::X ? 1 : -1;
      return compare_same_kind(a, b);
    case RankingKind::OrderlyU:
      if (a.order != b.order) return cmp(a.order, b.order);
      if (a.kind != b.kind) return a.kind == VarKind::U ? 1 : -1;
      return compare_same_kind(a, b);
  }
  return 0;
}

LinDiffPoly LinDiffPoly::var(const Derivative& d, const RatFunc& c) {
  LinDiffPoly p;
  p.add_term(d, c);
  return p;
}

const RatFunc& LinDiffPoly::coeff(const Derivative& d) const {
  auto it = terms_.find(d);
  return it == terms_.end() ? zero_coeff() : it->second;
}

bool LinDiffPoly::has_kind(VarKind kind) const {
  return std::any_of(terms_.begin(), terms_.end(), [&](const auto& kv) { return kv.first.kind == kind; });
}

void LinDiffPoly::add_term(const Derivative& d, const RatFunc& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(d, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

LinDiffPoly LinDiffPoly::operator-() const {
  LinDiffPoly r = *this;
  for (auto& [d, c] : r.terms_) c = -c;
  r.constant_ = -r.constant_;
  return r;
}

LinDiffPoly& LinDiffPoly::operator+=(const LinDiffPoly& o) {
  for (const auto& [d, c] : o.terms_) add_term(d, c);
  constant_ += o.constant_;
  return *this;
}

LinDiffPoly& LinDiffPoly::operator-=(const LinDiffPoly& o) {
  for (const auto& [d, c] : o.terms_) add_term(d, -c);
  constant_ -= o.constant_;
  return *this;
}

LinDiffPoly LinDiffPoly::scaled(const RatFunc& c) const {
  if (c.is_zero()) return LinDiffPoly();
  LinDiffPoly r = *this;
  for (auto& [d, v] : r.terms_) v *= c;
  r.constant_ *= c;
  return r;
}

std::optional<Derivative> LinDiffPoly::lead(const Ranking& ranking) const {
  std::optional<Derivative> best;
  for (const auto& [d, c] : terms_) {
    if (!best || ranking.compare(d, *best) > 0) best = d;
  }
  return best;
}

std::vector<std::pair<Derivative, RatFunc>> LinDiffPoly::sorted_terms(const Ranking& ranking) const {
  std::vector<std::pair<Derivative, RatFunc>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(),
            [&](const auto& a, const auto& b) { return ranking.compare(a.first, b.first) > 0; });
  return out;
}

LinDiffPoly LinDiffPoly::x_part() const {
  LinDiffPoly r(constant_);
  for (const auto& [d, c] : terms_) {
    if (d.kind == VarKind::X) r.terms_.emplace(d, c);
  }
  return r;
}

LinDiffPoly LinDiffPoly::u_part() const {
  LinDiffPoly r;
  for (const auto& [d, c] : terms_) {
    if (d.kind == VarKind::U) r.terms_.emplace(d, c);
  }
  return r;
}

std::string LinDiffPoly::to_string() const {
  std::vector<std::string> parts;
  for (const auto& [d, c] : sorted_terms()) parts.push_back(coeff_times(c, d.to_string()));
  if (!constant_.is_zero()) {
    parts.push_back(constant_.is_single_term() ? constant_.to_string() : "(" + constant_.to_string() + ")");
  }
  return join_terms(parts);
}

std::string LinDiffPoly::to_latex() const {
  std::vector<std::string> parts;
  for (const auto& [d, c] : sorted_terms()) parts.push_back(coeff_times_latex(c, d.to_latex()));
  if (!constant_.is_zero()) {
    parts.push_back(constant_.is_single_term() ? constant_.to_latex()
                                               : "\\left(" + constant_.to_latex() + "\\right)");
  }
  return join_terms(parts);
}

int ord(const LinDiffPoly& p, VarKind kind, int index) {
  int best = -1;
  for (const auto& [d, c] : p.terms()) {
    if (d.kind == kind && d.index == index) best = std::max(best, d.order);
  }
  return best;
}

LinDiffPoly differentiate(const LinDiffPoly& p, int times) {
  LinDiffPoly cur = p;
  for (int s = 0; s < times; ++s) {
    LinDiffPoly next(cur.constant().derive());
    for (const auto& [d, c] : cur.terms()) {
      next.add_term(d, c.derive());
      next.add_term(Derivative{d.kind, d.index, d.order + 1}, c);
    }
    cur = std::move(next);
  }
  return cur;
}

LinDiffPoly apply(const OreOp& op, const LinDiffPoly& p) {
  LinDiffPoly acc;
  LinDiffPoly dk = p;
  for (int k = 0; k <= op.degree(); ++k) {
    if (k > 0) dk = differentiate(dk);
    if (!op.coeff(k).is_zero()) acc += dk.scaled(op.coeff(k));
  }
  return acc;
}

LinDiffPoly apply(const OreOp& op, int j) {
  LinDiffPoly acc;
  for (int k = 0; k <= op.degree(); ++k) acc.add_term(Derivative::u(j, k), op.coeff(k));
  return acc;
}

DppeSystem::DppeSystem(std::vector<RatFunc> a, std::vector<std::vector<OreOp>> ops)
    : a_(std::move(a)), ops_(std::move(ops)) {
  const int rows = static_cast<int>(a_.size());
  if (rows < 2) throw InvalidSystem("a system needs at least two equations");
  if (static_cast<int>(ops_.size()) != rows) throw InvalidSystem("operator table has the wrong number of rows");
  for (const auto& row : ops_) {
    if (static_cast<int>(row.size()) != rows - 1) {
      throw InvalidSystem("each equation needs exactly n-1 parameter operators");
    }
  }
  for (int j = 0; j < rows - 1; ++j) {
    bool present = false;
    for (int i = 0; i < rows; ++i) present = present || !op(i, j).is_zero();
    if (!present) throw InvalidSystem("parameter u" + std::to_string(j + 1) + " does not occur in any equation");
  }
  for (int i = 0; i < rows; ++i) {
    int o = -1;
    for (int j = 0; j < rows - 1; ++j) o = std::max(o, op(i, j).degree());
    if (o < 0) throw InvalidSystem("equation for x" + std::to_string(i + 1) + " has no parameter");
    orders_.push_back(o);
    total_order_ += o;
  }
}

bool DppeSystem::has_constant_coefficients() const {
  for (const auto& row : ops_) {
    for (const auto& op : row) {
      if (!op.has_constant_coefficients()) return false;
    }
  }
  return true;
}

Decomposition decompose(const DppeSystem& sys) {
  Decomposition d;
  for (int i = 0; i < sys.n(); ++i) {
    LinDiffPoly t = LinDiffPoly::var(Derivative::x(i + 1)) - LinDiffPoly(sys.a(i));
    LinDiffPoly h;
    for (int j = 0; j < sys.params(); ++j) h += apply(sys.op(i, j), j + 1);
    d.f.push_back(t + h);
    d.h.push_back(std::move(h));
    d.t.push_back(std::move(t));
  }
  return d;
}

GammaData gamma(const DppeSystem& sys) {
  GammaData g;
  for (int j = 0; j < sys.params(); ++j) {
    int best = std::numeric_limits<int>::max();
    for (int i = 0; i < sys.n(); ++i) best = std::min(best, sys.order(i) - sys.op(i, j).degree());
    g.per_param.push_back(best);
    g.total += best;
  }
  return g;
}

namespace {

// A linear polynomial scaled to coefficients in Q[t]. Reduction runs in
// this form so that no coefficient is gcd-normalized until the end.
struct PolyRow {
  std::map<Derivative, UniPoly> terms;
  UniPoly constant;

  void scale(const UniPoly& f) {
    if (f.is_one()) return;
    for (auto& [d, c] : terms) c *= f;
    constant *= f;
  }

  void subtract(const PolyRow& o, const UniPoly& f) {
    for (const auto& [d, c] : o.terms) {
      auto& slot = terms[d];
      slot -= f * c;
      if (slot.is_zero()) terms.erase(d);
    }
    if (!o.constant.is_zero()) constant -= f * o.constant;
  }
};

UniPoly lcm_of_denominators(const LinDiffPoly& p) {
  UniPoly l = p.constant().den();
  for (const auto& [d, c] : p.terms()) {
    if (!c.den().is_one()) l = UniPoly::exact_div(l * c.den(), gcd(l, c.den()));
  }
  return l;
}

PolyRow to_poly_row(const LinDiffPoly& p, const UniPoly& l) {
  PolyRow r;
  for (const auto& [d, c] : p.terms()) r.terms.emplace(d, c.num() * UniPoly::exact_div(l, c.den()));
  if (!p.constant().is_zero()) r.constant = p.constant().num() * UniPoly::exact_div(l, p.constant().den());
  return r;
}

// P_{s+1} = D*d(P_s) - (s+1)*D'*P_s keeps P_s = D^(s+1) * d^s(A) polynomial.
PolyRow next_derivative(const PolyRow& ps, const UniPoly& den, const UniPoly& dden, int s) {
  PolyRow out;
  const UniPoly k = dden * UniPoly(s + 1);
  auto add = [&](const Derivative& d, UniPoly v) {
    if (v.is_zero()) return;
    auto& slot = out.terms[d];
    slot += v;
    if (slot.is_zero()) out.terms.erase(d);
  };
  for (const auto& [d, c] : ps.terms) {
    add(d, den * c.derivative() - k * c);
    add(Derivative{d.kind, d.index, d.order + 1}, den * c);
  }
  out.constant = den * ps.constant.derivative() - k * ps.constant;
  return out;
}

}  // namespace

LinDiffPoly prem_linear(const LinDiffPoly& p, const std::vector<LinDiffPoly>& chain) {
  struct Reducer {
    Derivative lead;
    UniPoly den;
    UniPoly dden;
    std::vector<PolyRow> derivs;  // derivs[s] = den^(s+1) * d^s(a)

    const PolyRow& derivative(int s) {
      while (static_cast<int>(derivs.size()) <= s) {
        const int k = static_cast<int>(derivs.size()) - 1;
        derivs.push_back(next_derivative(derivs.back(), den, dden, k));
      }
      return derivs[static_cast<std::size_t>(s)];
    }
  };
  std::vector<Reducer> reducers;
  for (const auto& a : chain) {
    auto l = a.lead(kRankRStar);
    if (!l) continue;
    const UniPoly den = lcm_of_denominators(a);
    reducers.push_back({*l, den, den.derivative(), {to_poly_row(a, den)}});
  }
  if (reducers.empty()) return p;

  UniPoly scale = lcm_of_denominators(p);
  PolyRow r = to_poly_row(p, scale);
  for (;;) {
    // Highest reducible derivative first: eliminating it introduces only
    // lower derivatives, so the loop terminates.
    std::optional<Derivative> target;
    Reducer* by = nullptr;
    for (const auto& [d, c] : r.terms) {
      if (target && kRankRStar.compare(d, *target) <= 0) continue;
      Reducer* best = nullptr;
      for (auto& red : reducers) {
        if (!red.lead.same_variable(d) || red.lead.order > d.order) continue;
        if (!best || red.lead.order > best->lead.order) best = &red;
      }
      if (best) {
        target = d;
        by = best;
      }
    }
    if (!target) break;
    const PolyRow& red = by->derivative(target->order - by->lead.order);
    UniPoly lc = red.terms.at(*target);
    UniPoly f = r.terms.at(*target);
    const UniPoly g = gcd(lc, f);
    if (!g.is_one()) {
      lc = UniPoly::exact_div(lc, g);
      f = UniPoly::exact_div(f, g);
    }
    r.scale(lc);
    scale *= lc;
    r.subtract(red, f);
    r.terms.erase(*target);
  }

  LinDiffPoly out(RatFunc(r.constant, scale));
  for (const auto& [d, c] : r.terms) out.add_term(d, RatFunc(c, scale));
  return out;
}

}  // namespace dres
