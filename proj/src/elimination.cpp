#include "dres/elimination.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

namespace dres {

namespace {

LinDiffPoly make_lead_monic(const LinDiffPoly& p) {
  auto l = p.lead(kRankRStar);
  if (!l) return p;
  const RatFunc& c = p.coeff(*l);
  return c.is_one() ? p : p.scaled(c.inverse());
}

void sort_ascending(std::vector<LinDiffPoly>& v) {
  std::sort(v.begin(), v.end(), [](const LinDiffPoly& a, const LinDiffPoly& b) {
    return kRankRStar.compare(*a.lead(kRankRStar), *b.lead(kRankRStar)) < 0;
  });
}

UniPoly poly_lcm(const UniPoly& a, const UniPoly& b) {
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  return UniPoly::exact_div(a * b, gcd(a, b));
}

}  // namespace

std::vector<LinDiffPoly> EchelonBasis::x_rows() const {
  std::vector<LinDiffPoly> out;
  for (const auto& r : rows) {
    if (!r.has_kind(VarKind::U)) out.push_back(r);
  }
  return out;
}

EchelonBasis echelon(const PsSet& ps) {
  if (ps.homogeneous()) throw std::invalid_argument("echelon needs a prolongation set with X-parts");
  EchelonBasis basis;
  basis.source = ps.variant;
  basis.u_columns = ps.u_columns;

  std::set<Derivative> xs;
  for (const auto& e : ps.entries) {
    for (const auto& [d, c] : e.poly.terms()) {
      if (d.kind == VarKind::X) xs.insert(d);
    }
  }
  std::vector<Derivative> cols = ps.u_columns;
  std::vector<Derivative> xcols(xs.begin(), xs.end());
  std::sort(xcols.begin(), xcols.end(),
            [](const Derivative& a, const Derivative& b) { return kRankRStar.compare(a, b) > 0; });
  cols.insert(cols.end(), xcols.begin(), xcols.end());
  const std::size_t const_col = cols.size();

  KMatrix m(ps.entries.size(), cols.size() + 1);
  std::map<Derivative, std::size_t> col_of;
  for (std::size_t c = 0; c < cols.size(); ++c) col_of[cols[c]] = c;
  for (std::size_t r = 0; r < ps.entries.size(); ++r) {
    const LinDiffPoly& p = ps.entries[r].poly;
    for (const auto& [d, c] : p.terms()) m(r, col_of.at(d)) = c;
    m(r, const_col) = p.constant();
  }

  KMatrix e = rref(std::move(m));
  for (std::size_t r = 0; r < e.rows(); ++r) {
    LinDiffPoly p(e(r, const_col));
    for (std::size_t c = 0; c < cols.size(); ++c) p.add_term(cols[c], e(r, c));
    if (!p.lead()) throw std::logic_error("echelon produced a nonzero constant row");
    basis.rows.push_back(std::move(p));
  }
  std::reverse(basis.rows.begin(), basis.rows.end());
  return basis;
}

LinDiffPoly echelon_det(const EchelonBasis& basis) {
  const std::size_t n = basis.rows.size();
  KMatrix left(n, basis.u_columns.size());
  std::vector<LinDiffPoly> last;
  for (std::size_t k = 0; k < n; ++k) {
    const LinDiffPoly& b = basis.rows[n - 1 - k];
    for (std::size_t c = 0; c < basis.u_columns.size(); ++c) left(k, c) = b.coeff(basis.u_columns[c]);
    last.push_back(b.x_part());
  }
  return det_with_polynomial_column(left, last);
}

std::vector<LinDiffPoly> characteristic_set(const EchelonBasis& basis) {
  std::vector<LinDiffPoly> chain;
  std::deque<LinDiffPoly> pending(basis.rows.begin(), basis.rows.end());
  while (!pending.empty()) {
    LinDiffPoly p = prem_linear(pending.front(), chain);
    pending.pop_front();
    if (p.is_zero()) continue;
    auto lead = p.lead(kRankRStar);
    if (!lead) throw std::logic_error("characteristic set: the ideal contains a nonzero constant");
    p = make_lead_monic(p);

    std::vector<LinDiffPoly> kept;
    for (auto& a : chain) {
      const Derivative al = *a.lead(kRankRStar);
      if (al.same_variable(*lead) && al.order >= lead->order) {
        pending.push_back(std::move(a));
      } else {
        kept.push_back(std::move(a));
      }
    }
    kept.push_back(std::move(p));
    // Leads are pairwise non-derivative now; tail-reduce every member by the others.
    for (std::size_t i = 0; i < kept.size(); ++i) {
      std::vector<LinDiffPoly> others;
      for (std::size_t k = 0; k < kept.size(); ++k) {
        if (k != i) others.push_back(kept[k]);
      }
      kept[i] = make_lead_monic(prem_linear(kept[i], others));
    }
    chain = std::move(kept);
  }
  sort_ascending(chain);
  return chain;
}

std::vector<LinDiffPoly> x_elements(const std::vector<LinDiffPoly>& chain) {
  std::vector<LinDiffPoly> out;
  for (const auto& a : chain) {
    if (!a.has_kind(VarKind::U)) out.push_back(a);
  }
  return out;
}

std::vector<LinDiffPoly> inversion_maps(const EchelonBasis& basis, int params) {
  std::vector<LinDiffPoly> maps;
  for (int j = 1; j <= params; ++j) {
    const Derivative uj = Derivative::u(j, 0);
    const LinDiffPoly* found = nullptr;
    for (const auto& b : basis.rows) {
      if (b.lead(kRankRStar) == uj && b.u_part() == LinDiffPoly::var(uj)) {
        found = &b;
        break;
      }
    }
    if (!found) throw std::domain_error("no inversion maps: system is improper or degenerate");
    maps.push_back(-found->x_part());
  }
  return maps;
}

std::string to_string(Properness p) {
  switch (p) {
    case Properness::Proper: return "proper";
    case Properness::Improper: return "improper";
    case Properness::Undetermined: return "undetermined";
  }
  return "?";
}

std::string to_string(Method m) {
  switch (m) {
    case Method::Cres: return "cres";
    case Method::CresReduced: return "cres-reduced";
    case Method::Echelon: return "echelon";
    case Method::N2: return "n2";
    case Method::N3Const: return "n3const";
  }
  return "?";
}

std::vector<OreOp> column_gcrds(const DppeSystem& sys) {
  std::vector<OreOp> out;
  for (int j = 0; j < sys.params(); ++j) {
    std::vector<OreOp> col;
    for (int i = 0; i < sys.n(); ++i) col.push_back(sys.op(i, j));
    out.push_back(gcrd(col));
  }
  return out;
}

DppeSystem reduce_system(const DppeSystem& sys) {
  const auto g = column_gcrds(sys);
  std::vector<std::vector<OreOp>> ops(static_cast<std::size_t>(sys.n()));
  for (int i = 0; i < sys.n(); ++i) {
    for (int j = 0; j < sys.params(); ++j) {
      ops[static_cast<std::size_t>(i)].push_back(right_div_exact(sys.op(i, j), g[static_cast<std::size_t>(j)]));
    }
  }
  return DppeSystem(sys.constants(), std::move(ops));
}

namespace {

std::vector<int> unresolved_params(const std::vector<LinDiffPoly>& chain, int params) {
  std::vector<int> out;
  for (int j = 1; j <= params; ++j) {
    bool lead_at_zero = false;
    for (const auto& a : chain) lead_at_zero = lead_at_zero || a.lead(kRankRStar) == Derivative::u(j, 0);
    if (!lead_at_zero) out.push_back(j - 1);
  }
  return out;
}

std::vector<std::pair<int, OreOp>> nontrivial(const std::vector<OreOp>& gcrds) {
  std::vector<std::pair<int, OreOp>> out;
  for (std::size_t j = 0; j < gcrds.size(); ++j) {
    if (gcrds[j].degree() > 0) out.emplace_back(static_cast<int>(j), gcrds[j]);
  }
  return out;
}

// Inversion maps from a characteristic set in which every u_j is an order-0
// lead: the U-parts are then exactly u_j.
std::optional<std::vector<LinDiffPoly>> maps_from_chain(const std::vector<LinDiffPoly>& chain, int params) {
  std::vector<LinDiffPoly> maps;
  for (int j = 1; j <= params; ++j) {
    const Derivative uj = Derivative::u(j, 0);
    bool found = false;
    for (const auto& a : chain) {
      if (a.lead(kRankRStar) == uj && a.u_part() == LinDiffPoly::var(uj)) {
        maps.push_back(-a.x_part());
        found = true;
        break;
      }
    }
    if (!found) return std::nullopt;
  }
  return maps;
}

PropernessReport chain_properness(const std::vector<LinDiffPoly>& chain, int params,
                                  std::vector<std::pair<int, OreOp>> gcrd_witnesses) {
  PropernessReport rep;
  rep.nontrivial_gcrds = std::move(gcrd_witnesses);
  rep.unresolved_params = unresolved_params(chain, params);
  if (!rep.nontrivial_gcrds.empty()) {
    rep.verdict = Properness::Improper;
    rep.reason = "a parameter column has a non-constant gcrd";
  } else if (rep.unresolved_params.empty()) {
    rep.verdict = Properness::Proper;
    rep.reason = "every parameter is an order-0 lead of the characteristic set";
  } else {
    rep.verdict = Properness::Improper;
    rep.reason = "some parameter is not an order-0 lead of the characteristic set";
  }
  return rep;
}

void fill_input_values(const DppeSystem& sys, ImplicitResult& r) {
  r.gamma = gamma(sys);
  r.dres_h = dres_h(sys);
  r.dres = dres(sys);
  r.dcres_h = dcres_h(sys);
}

}  // namespace

PropernessReport properness(const DppeSystem& sys) {
  if (!dcres_h(sys).is_zero()) {
    PropernessReport rep;
    rep.verdict = Properness::Proper;
    rep.reason = "the complete homogeneous resultant is nonzero";
    return rep;
  }
  auto witnesses = nontrivial(column_gcrds(sys));
  if (!witnesses.empty()) {
    PropernessReport rep;
    rep.verdict = Properness::Improper;
    rep.nontrivial_gcrds = std::move(witnesses);
    rep.reason = "a parameter column has a non-constant gcrd";
    return rep;
  }
  auto chain = characteristic_set(echelon(build_ps(sys, PsVariant::Full)));
  return chain_properness(chain, sys.params(), {});
}

namespace {

// Resultant route on `target`; `input` is the system the user gave.
std::optional<ImplicitResult> cres_route(const DppeSystem& target, ImplicitResult base) {
  const RatFunc h = dcres_h(target);
  if (h.is_zero()) return std::nullopt;
  ImplicitResult r = std::move(base);
  LinDiffPoly res = dcres(target);
  if (res.is_zero()) throw std::logic_error("dCRes vanishes although dCRes^h does not");
  r.implicit = canonical(res);
  r.dimension = target.n() - 1;
  EchelonBasis basis = echelon(build_ps(target, PsVariant::Complete));
  // With dCRes^h != 0 the lowest n rows already form a characteristic set.
  if (basis.x_rows().size() != 1 || basis.rows.size() < static_cast<std::size_t>(target.n())) {
    throw std::logic_error("complete echelon basis has the wrong shape");
  }
  r.char_set.assign(basis.rows.begin(), basis.rows.begin() + target.n());
  r.char_set_a0 = x_elements(r.char_set);
  if (r.reduced) {
    r.reduced_dcres_h = h;
    r.dcres = std::move(res);
  } else {
    r.dcres = std::move(res);
    r.proper.verdict = Properness::Proper;
    r.proper.reason = "the complete homogeneous resultant is nonzero";
    r.inversion = inversion_maps(basis, target.params());
  }
  return r;
}

}  // namespace

std::optional<ImplicitResult> implicitize_cres(const DppeSystem& sys) {
  ImplicitResult base;
  fill_input_values(sys, base);
  base.method = Method::Cres;
  return cres_route(sys, std::move(base));
}

namespace {

ImplicitResult echelon_route(const DppeSystem& sys, ImplicitResult r) {
  const auto gcrds = column_gcrds(sys);
  auto witnesses = nontrivial(gcrds);
  const DppeSystem& target = witnesses.empty() ? sys : (r.reduced ? *r.reduced : sys);
  std::optional<DppeSystem> local;
  const DppeSystem* tp = &target;
  if (!witnesses.empty() && !r.reduced) {
    local = reduce_system(sys);
    r.reduced = local;
    tp = &*local;
  }
  r.method = Method::Echelon;
  r.char_set = characteristic_set(echelon(build_ps(*tp, PsVariant::Full)));
  r.char_set_a0 = x_elements(r.char_set);
  if (r.char_set_a0.empty()) throw std::logic_error("characteristic set has no element free of U");
  r.dimension = sys.n() - static_cast<int>(r.char_set_a0.size());
  if (r.char_set_a0.size() == 1) r.implicit = canonical(r.char_set_a0.front());
  r.proper = chain_properness(r.char_set, sys.params(), std::move(witnesses));
  if (r.proper.verdict == Properness::Proper) r.inversion = maps_from_chain(r.char_set, sys.params());
  return r;
}

}  // namespace

ImplicitResult implicitize_echelon(const DppeSystem& sys) {
  ImplicitResult base;
  fill_input_values(sys, base);
  return echelon_route(sys, std::move(base));
}

ImplicitResult implicitize(const DppeSystem& sys) {
  ImplicitResult base;
  fill_input_values(sys, base);
  base.method = Method::Cres;
  if (!base.dcres_h.is_zero()) return *cres_route(sys, std::move(base));

  auto witnesses = nontrivial(column_gcrds(sys));
  if (!witnesses.empty()) {
    base.reduced = reduce_system(sys);
    base.method = Method::CresReduced;
    base.proper.verdict = Properness::Improper;
    base.proper.nontrivial_gcrds = witnesses;
    base.proper.reason = "a parameter column has a non-constant gcrd";
    const DppeSystem reduced = *base.reduced;
    if (auto r = cres_route(reduced, base)) return *r;
    base.reduced_dcres_h = RatFunc();
  }
  return echelon_route(sys, std::move(base));
}

LinDiffPoly canonical(const LinDiffPoly& p) {
  if (p.is_zero()) return p;
  std::vector<const RatFunc*> coeffs;
  for (const auto& [d, c] : p.terms()) coeffs.push_back(&c);
  if (!p.constant().is_zero()) coeffs.push_back(&p.constant());

  UniPoly den(1);
  for (const RatFunc* c : coeffs) den = poly_lcm(den, c->den());
  UniPoly content;
  for (const RatFunc* c : coeffs) {
    content = gcd(content, c->num() * UniPoly::exact_div(den, c->den()));
    if (content.is_one()) break;
  }
  // Scale by den/content, then make the rational coefficients coprime integers.
  LinDiffPoly q = p.scaled(RatFunc(den, content));
  Integer lcm_den(1);
  Integer gcd_num(0);
  auto visit = [&](const RatFunc& c) {
    for (const auto& r : c.num().coefficients()) {
      if (sgn(r) == 0) continue;
      mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), r.get_den().get_mpz_t());
      mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), r.get_num().get_mpz_t());
    }
  };
  for (const auto& [d, c] : q.terms()) visit(c);
  visit(q.constant());
  Rational factor(lcm_den, gcd_num);
  factor.canonicalize();
  // gcd of numerators of the scaled coefficients: scale by lcm first.
  q = q.scaled(RatFunc(Rational(lcm_den)));
  Integer g(0);
  auto visit_int = [&](const RatFunc& c) {
    for (const auto& r : c.num().coefficients()) {
      if (sgn(r) != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), r.get_num().get_mpz_t());
    }
  };
  for (const auto& [d, c] : q.terms()) visit_int(c);
  visit_int(q.constant());
  Rational inv_g(Integer(1), g);
  inv_g.canonicalize();
  q = q.scaled(RatFunc(inv_g));

  const RatFunc& top = q.lead(kRankRStar) ? q.coeff(*q.lead(kRankRStar)) : q.constant();
  if (sgn(top.num().leading()) < 0) q = -q;
  return q;
}

std::vector<RatFunc> evaluate_parametrization(const DppeSystem& sys, const std::vector<RatFunc>& u) {
  std::vector<RatFunc> x;
  for (int i = 0; i < sys.n(); ++i) {
    RatFunc v = sys.a(i);
    for (int j = 0; j < sys.params(); ++j) v -= sys.op(i, j).apply_to(u.at(static_cast<std::size_t>(j)));
    x.push_back(std::move(v));
  }
  return x;
}

RatFunc substitute(const LinDiffPoly& p, const std::vector<RatFunc>& x, const std::vector<RatFunc>& u) {
  RatFunc acc = p.constant();
  for (const auto& [d, c] : p.terms()) {
    const auto& src = d.kind == VarKind::X ? x : u;
    acc += c * src.at(static_cast<std::size_t>(d.index - 1)).derive(d.order);
  }
  return acc;
}

bool vanishing_oracle(const DppeSystem& sys, const LinDiffPoly& candidate, int trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-9, 9);
  for (int trial = 0; trial < trials; ++trial) {
    std::vector<RatFunc> u;
    for (int j = 0; j < sys.params(); ++j) {
      std::vector<Rational> c(7);
      for (auto& v : c) v = coeff(rng);
      u.emplace_back(UniPoly(std::move(c)));
    }
    if (!substitute(candidate, evaluate_parametrization(sys, u), u).is_zero()) return false;
  }
  return true;
}

}  // namespace dres
