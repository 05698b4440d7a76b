#include "dres/special.hpp"

#include <array>

namespace dres {

namespace {

LinDiffPoly shifted_x(const DppeSystem& sys, int i) {
  return LinDiffPoly::var(Derivative::x(i + 1)) - LinDiffPoly(sys.a(i));
}

void fill_common(const DppeSystem& sys, ImplicitResult& r) {
  r.gamma = gamma(sys);
  r.dres_h = dres_h(sys);
  r.dres = dres(sys);
  r.dcres_h = dcres_h(sys);
  r.dimension = sys.n() - 1;
}

}  // namespace

Coprimality coprimality_n2(const OreOp& l1, const OreOp& l2) {
  Coprimality c;
  c.gcrd = gcrd(l1, l2);
  c.coprime = c.gcrd.degree() == 0;
  return c;
}

LinDiffPoly implicit_n2(const DppeSystem& sys) {
  if (sys.n() != 2) throw NotApplicable("the n2 method needs exactly two equations");
  OreOp l1 = sys.op(0, 0);
  OreOp l2 = sys.op(1, 0);
  const OreOp g = gcrd(l1, l2);
  if (g.degree() > 0) {
    l1 = right_div_exact(l1, g);
    l2 = right_div_exact(l2, g);
  }
  const auto [d1, d2] = commutator_correction(l1, l2);
  LinDiffPoly a = apply(l2 - d2, shifted_x(sys, 0)) - apply(l1 - d1, shifted_x(sys, 1));
  return canonical(a);
}

LinDiffPoly implicit_n3_const(const DppeSystem& sys) {
  if (sys.n() != 3) throw NotApplicable("the n3const method needs exactly three equations");
  if (!sys.has_constant_coefficients()) {
    throw NotApplicable("variable coefficients: general pipeline required");
  }
  auto l = [&](int i, int j) -> const OreOp& { return sys.op(i - 1, j - 1); };
  // Constant coefficients commute, so these are the 2x2 minors of (L_ij).
  const std::array<OreOp, 3> minors = {
      l(2, 1) * l(3, 2) - l(2, 2) * l(3, 1),
      -(l(1, 1) * l(3, 2) - l(1, 2) * l(3, 1)),
      l(1, 1) * l(2, 2) - l(1, 2) * l(2, 1),
  };
  LinDiffPoly p;
  for (int i = 0; i < 3; ++i) p += apply(minors[static_cast<std::size_t>(i)], shifted_x(sys, i));

  const KMatrix s = s_matrix(sys, true);
  const int top_base = sys.total_order() - gamma(sys).total;
  bool some_nonzero = false;
  for (int i = 0; i < 3; ++i) {
    RatFunc det = det_exact(s_minor(s, static_cast<std::size_t>(i)));
    if (i == 1) det = -det;
    const RatFunc& c = p.coeff(Derivative::x(i + 1, top_base - sys.order(i)));
    if (c != det) {
      throw std::logic_error("coefficient of x" + std::to_string(i + 1) + " in P disagrees with det(S_gamma" +
                             std::to_string(i + 1) + ")");
    }
    some_nonzero = some_nonzero || !det.is_zero();
  }
  if (!some_nonzero) throw NotApplicable("every det(S_gamma i) vanishes: general pipeline required");
  return p;
}

ImplicitResult implicitize_n2(const DppeSystem& sys) {
  ImplicitResult r;
  r.implicit = implicit_n2(sys);
  fill_common(sys, r);
  r.method = Method::N2;
  const Coprimality c = coprimality_n2(sys.op(0, 0), sys.op(1, 0));
  if (c.coprime) {
    r.proper.verdict = Properness::Proper;
    r.proper.reason = "the two operators are right-coprime";
  } else {
    r.proper.verdict = Properness::Improper;
    r.proper.nontrivial_gcrds.emplace_back(0, c.gcrd);
    r.proper.reason = "a parameter column has a non-constant gcrd";
    r.reduced = reduce_system(sys);
  }
  return r;
}

ImplicitResult implicitize_n3_const(const DppeSystem& sys) {
  LinDiffPoly p = implicit_n3_const(sys);
  ImplicitResult r;
  fill_common(sys, r);
  if (r.dcres_h.is_zero()) throw NotApplicable("dCRes^h vanishes: general pipeline required");
  r.implicit = canonical(p);
  r.dcres = dcres(sys);
  r.method = Method::N3Const;
  r.proper.verdict = Properness::Proper;
  r.proper.reason = "the complete homogeneous resultant is nonzero";
  r.inversion = inversion_maps(echelon(build_ps(sys, PsVariant::Complete)), sys.params());
  return r;
}

}  // namespace dres
