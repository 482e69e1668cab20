#include "semiroots/shift.hpp"

#include <algorithm>
#include <cmath>

namespace semiroots {

namespace {

const Poly kW = Poly::identity();

Poly cleaned(const Poly& p) { return p.trimmed(1e-14); }

void require_beta(const ShiftStep& s) {
  if (s.beta == Cplx{}) throw Error(ErrorKind::Degenerate, "shift step with beta = 0");
}

}  // namespace

MobiusMat MobiusMat::identity() { return {Poly::constant(1.0), Poly{}, Poly{}, Poly::constant(1.0), 1.0}; }

Cplx MobiusMat::apply(Cplx s, Cplx w) const { return (A(w) * s + B(w)) / (C(w) * s + D(w)); }

Poly MobiusMat::determinant() const { return A * D - B * C; }

AlgebraicStieltjes two_rho(double c) {
  return AlgebraicStieltjes(Poly({0.0, -1.0}), 1.0, Poly::constant(1.0), SemicircleParam(c));
}

Cplx shift_value(Cplx s_value, const ShiftStep& step, Cplx w) { return 1.0 / (step.alpha - w - step.beta * s_value); }

AlgebraicStieltjes shift_once(const AlgebraicStieltjes& s, const ShiftStep& step) {
  require_beta(step);
  const Poly& F = s.F();
  const Poly& G = s.G();
  const Poly a_minus_w = Poly({step.alpha, -1.0});
  const Poly head = a_minus_w * G - step.beta * F;

  if (s.kappa() == Cplx{}) {
    const Poly den = cleaned(head);
    if (den.is_zero()) throw Error(ErrorKind::Degenerate, "shifted rational function has zero denominator");
    return AlgebraicStieltjes(G, 0.0, den, s.param());
  }

  // G' = ((alpha - w) G - beta F)^2 - beta^2 kappa^2 (w^2 - 4c), divided by G.
  const Poly disc = Poly({-4.0 * s.c(), 0.0, 1.0});
  const Cplx k2 = s.kappa() * s.kappa();
  const auto [H, rem] = (F * F - k2 * disc).divmod(G);
  const double scale = std::max({(F * F).max_abs(), std::abs(k2) * disc.max_abs(), 1e-300});
  if (rem.max_abs() > 1e-9 * scale)
    throw Error(ErrorKind::Degenerate, "G does not divide F^2 - kappa^2 (w^2 - 4c); shift leaves the algebraic family");
  const Poly Gn = cleaned(a_minus_w * a_minus_w * G - 2.0 * step.beta * a_minus_w * F + step.beta * step.beta * H);
  if (Gn.is_zero()) throw Error(ErrorKind::Degenerate, "shifted function has zero denominator");
  return AlgebraicStieltjes(cleaned(head), step.beta * s.kappa(), Gn, s.param());
}

MobiusMat mobius_chain(const std::vector<ShiftStep>& steps) {
  MobiusMat m = MobiusMat::identity();
  for (const auto& st : steps) {
    require_beta(st);
    const Poly d = Poly({st.alpha, -1.0});
    // (0 1; -beta alpha - w) * (A B; C D)
    MobiusMat next;
    next.A = m.C;
    next.B = m.D;
    next.C = -st.beta * m.A + d * m.C;
    next.D = -st.beta * m.B + d * m.D;
    next.det = m.det * st.beta;
    m = std::move(next);
  }
  return m;
}

AlgebraicStieltjes assemble_FG(const MobiusMat& m, const ShiftStep& inner, double c) {
  require_beta(inner);
  const Cplx al = inner.alpha;
  const Cplx be = inner.beta;
  const Poly F0({al, -(1.0 - be)});
  const Poly G0({al * al + 4.0 * c * be * be, -2.0 * al * (1.0 - be), 1.0 - 2.0 * be});
  const Poly F = m.A * m.C + (m.A * m.D + m.B * m.C) * F0 + m.B * m.D * G0;
  const Poly G = m.C * m.C + 2.0 * m.C * m.D * F0 + m.D * m.D * G0;
  return AlgebraicStieltjes(cleaned(F), be * m.det, cleaned(G), SemicircleParam(c));
}

AlgebraicStieltjes shift_chain(const ShiftStep& inner, const std::vector<ShiftStep>& outer, double c) {
  AlgebraicStieltjes s = shift_once(two_rho(c), inner);
  for (const auto& st : outer) s = shift_once(s, st);
  return s;
}

AlgebraicStieltjes two_shift_closed(Cplx al, Cplx be, Cplx ga, Cplx de, double c) {
  if (be == Cplx{} || de == Cplx{}) throw Error(ErrorKind::Degenerate, "two-shift needs beta, delta != 0");
  const Cplx D = -de + al * ga;
  const Cplx q = 1.0 - 2.0 * be;
  const Cplx p = 1.0 - be;
  const Cplx fb = 4.0 * c * be * be;
  const Poly F({al * al * ga - al * de + fb * ga, -(al * al + fb + p * (-de + 2.0 * al * ga)), 2.0 * al * p + q * ga, -q});
  const Poly G({D * D + fb * ga * ga, -2.0 * (fb * ga + D * (al + p * ga)),
                al * al + fb + q * ga * ga + 2.0 * p * (D + al * ga), -2.0 * (al * p + q * ga), q});
  return AlgebraicStieltjes(cleaned(F), be * de, cleaned(G), SemicircleParam(c));
}

ComplexJacobi chain_jacobi_data(const ShiftStep& inner, const std::vector<ShiftStep>& outer, double c) {
  ComplexJacobi j;
  for (auto it = outer.rbegin(); it != outer.rend(); ++it) {
    j.a.push_back(it->alpha);
    j.bsq.push_back(it->beta);
  }
  j.a.push_back(inner.alpha);
  j.bsq.push_back(2.0 * inner.beta * c);
  j.tail = Tail::semicircular(c);
  return j;
}

}  // namespace semiroots
