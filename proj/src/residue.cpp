#include "semiroots/residue.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "semiroots/shift.hpp"

namespace semiroots {

namespace {

constexpr double kPi = std::numbers::pi;

Poly deflate_times(Poly p, Cplx root, int times) {
  for (int k = 0; k < times; ++k) p = p.deflate(root).first;
  return p;
}

bool real_root(Cplx z) { return std::abs(z.imag()) <= 1e-9 * (1.0 + std::abs(z)); }

}  // namespace

Poly residue_polynomial(const Poly& Q, double c) {
  (void)c;  // the w^0 and w^1 terms of the kernel do not involve c
  const Poly q = Q.trimmed(1e-14);
  if (q.is_zero()) throw Error(ErrorKind::InvalidArgument, "Q is zero");
  // sqrt(z^2 - 4c) / (z - w) = 1 + w/z + (w^2 - 2c)/z^2 + ..., and 1/Q = O(z^-deg Q):
  // only the first two kernel terms meet the z^-1 and z^0 terms of 1/Q.
  const SeriesAtInfinity inv = series_reciprocal(SeriesAtInfinity::exact(q, 4));
  const Cplx q0 = inv.coef(0);
  const Cplx q1 = inv.coef(-1);
  return Poly({q1, q0});
}

std::vector<PoleTerm> pole_terms(const Poly& Q, double c) {
  const Poly q = Q.trimmed(1e-14);
  if (q.is_zero()) throw Error(ErrorKind::InvalidArgument, "Q is zero");
  std::vector<PoleTerm> out;
  if (q.degree() < 1) return out;
  const SemicircleParam param(c);
  const double e = param.edge();
  for (const auto& root : poly_roots(q).roots) {
    Cplx z = root.location;
    const int m = root.multiplicity;
    if (real_root(z)) {
      const double x = z.real();
      if (std::abs(std::abs(x) - e) <= 1e-8 * (1.0 + e)) {
        if (m >= 2) throw Error(ErrorKind::EndpointHigherOrder, "multiple zero of Q at an endpoint of I_c");
        continue;
      }
      if (std::abs(x) < e) throw Error(ErrorKind::RootInsideCut, "Q vanishes inside I_c at t = " + std::to_string(x));
      z = x;
    }
    // h(z) = sqrt(z^2 - 4c) / Qt(z) with Qt = Q / (z - zeta)^m, expanded at zeta.
    const Poly qt = deflate_times(q, root.location, m).taylor_shift(z);
    const std::vector<Cplx> s = sqrt_taylor(z, param, m);
    std::vector<Cplx> inv(static_cast<size_t>(m));
    inv[0] = 1.0 / qt[0];
    for (int k = 1; k < m; ++k) {
      Cplx acc;
      for (int i = 1; i <= k; ++i) acc += qt[i] * inv[static_cast<size_t>(k - i)];
      inv[static_cast<size_t>(k)] = -acc / qt[0];
    }
    Poly qj;
    const Poly zeta_minus_w({z, -1.0});
    for (int i = 0; i < m; ++i) {
      Cplx ti;
      for (int j = 0; j <= i; ++j) ti += s[static_cast<size_t>(j)] * inv[static_cast<size_t>(i - j)];
      const int k = m - 1 - i;
      Poly term = Poly::constant(ti * ((k % 2 == 0) ? 1.0 : -1.0));
      for (int p = 0; p < m - 1 - k; ++p) term = term * zeta_minus_w;
      qj += term;
    }
    out.push_back({z, m, qj});
  }
  return out;
}

ResidueTransform::ResidueTransform(Poly Q, double c)
    : Q_(Q.trimmed(1e-14)), c_(c), poles_(pole_terms(Q_, c)), RQ_(residue_polynomial(Q_, c)) {}

Cplx ResidueTransform::operator()(Cplx w) const {
  const Cplx qw = Q_(w);
  if (std::abs(qw) <= 1e-14 * Q_.norm1() * std::pow(std::max(1.0, std::abs(w)), Q_.degree()))
    throw Error(ErrorKind::PoleAt, "Q vanishes at w");
  Cplx total = kPi * sqrt_branch(w, c_) / qw;
  for (const auto& p : poles_) total += kPi * p.q(w) / std::pow(p.zeta - w, p.multiplicity);
  return total - kPi * RQ_(w);
}

AlgebraicStieltjes ResidueTransform::to_algebraic() const {
  Poly P = -(Q_ * RQ_);
  for (const auto& p : poles_) {
    // Q / (zeta - w)^m = (-1)^m Q / (w - zeta)^m
    const Poly qt = deflate_times(Q_, p.zeta, p.multiplicity);
    P += (p.multiplicity % 2 == 0 ? 1.0 : -1.0) * (qt * p.q);
  }
  return AlgebraicStieltjes(kPi * P.trimmed(1e-13), kPi, Q_, c_);
}

ResidueTransform stieltjes_from_density(const Poly& Q, double c) { return ResidueTransform(Q, c); }

SigmaTau sigma_tau_mu(Cplx a, Cplx b, double c) {
  const Cplx qa = disc_root(a, c);
  if (std::abs(a - b) < 1e-9 * (1.0 + std::abs(a))) {
    // derivative limits
    return {a / qa, 4.0 * c / qa};
  }
  const Cplx qb = disc_root(b, c);
  return {(qb - qa) / (b - a), (a * qb - b * qa) / (b - a)};
}

double normalize_linear(double a, double c) {
  if (a * a < 4.0 * c) throw Error(ErrorKind::NotNormalizable, "linear Q needs a^2 >= 4c");
  return kPi * (-a + disc_root(a, c).real());
}

double normalize_quadratic(Cplx a, Cplx b, double c) { return kPi * (sigma_tau_mu(a, b, c).sigma.real() - 1.0); }

double normalize_series(const Poly& shape, double c) {
  const AlgebraicStieltjes s = ResidueTransform(shape, c).to_algebraic();
  return -series_of(s, 2).s(1).real();
}

double normalize_density(const Poly& shape, double c) {
  const Poly q = shape.trimmed(1e-14);
  if (q.is_zero()) throw Error(ErrorKind::InvalidArgument, "Q is zero");
  if (!q.is_real(1e-12)) throw Error(ErrorKind::NotReal, "Q must be real");
  double N = 0.0;
  const double lead = q.leading().real();
  if (q.degree() == 1) {
    N = normalize_linear(-q[0].real() / lead, c) / lead;
  } else if (q.degree() == 2) {
    const auto roots = poly_roots(q).flattened();
    N = normalize_quadratic(roots[0], roots[1], c) / lead;
  } else {
    N = normalize_series(q, c);
  }
  if (!std::isfinite(N) || std::abs(N) < 1e-14) throw Error(ErrorKind::NotNormalizable, "density has zero mass");
  DensitySpec d;
  d.c = SemicircleParam(c);
  d.Q = q.real_part() * N;
  try {
    d.validate();
  } catch (const Error& err) {
    throw Error(ErrorKind::NotNormalizable, std::string("no positive multiple of Q: ") + err.what());
  }
  return N;
}

Cplx contour_residue(const Poly& Q, double c, Cplx w, double radius_multiplier, int nodes) {
  const SemicircleParam param(c);
  double big = std::max(std::abs(w), param.edge());
  if (Q.degree() >= 1)
    for (const auto& r : poly_roots(Q).roots) big = std::max(big, std::abs(r.location));
  const double R = radius_multiplier * (1.0 + big);
  Cplx sum;
  for (int k = 0; k < nodes; ++k) {
    const double th = 2.0 * std::numbers::pi * k / nodes;
    const Cplx z = std::polar(R, th);
    sum += z * sqrt_branch(z, param) / ((z - w) * Q(z));
  }
  return sum / static_cast<double>(nodes);
}

// ---------------------------------------------------------------------------

namespace {

AlgebraicStieltjes one_shift_transform(const OneShiftSolution& s, double c) {
  return AlgebraicStieltjes(s.F0, s.beta, s.G0, SemicircleParam(c));
}

const Cplx kProbe[] = {{3.0, 1.0}, {-2.0, 0.5}, {0.3, 2.0}, {0.0, 1.0}, {-1.0, -1.5}, {5.0, -0.2}, {1.7, 0.05}};

double max_diff(const AlgebraicStieltjes& s, const ResidueTransform& mu) {
  double m = 0.0;
  for (Cplx w : kProbe) m = std::max(m, std::abs(s(w) - mu(w)));
  return m;
}

}  // namespace

MeasureMatch one_shift_measure_match(Cplx a, Cplx b, double c) {
  MeasureMatch out;
  out.set = one_shift_from_roots(a, b, c);
  out.report = classify_positivity(out.set);
  out.mu = sigma_tau_mu(a, b, c);

  const double N = normalize_quadratic(a, b, c);
  const Poly Q = (Poly({a * b, -(a + b), 1.0}) * N).real_part();
  const ResidueTransform mu(Q, c);

  std::vector<int> candidates;
  for (size_t i = 0; i < out.set.solutions.size(); ++i) {
    const auto& s = out.set.solutions[i];
    if (!out.report.per_solution[i].is_positive || s.coincident) continue;
    const double tol = 1e-8 * (1.0 + std::abs(out.mu.sigma));
    if (std::abs(s.sigma - out.mu.sigma) <= tol && std::abs(s.alpha / s.beta - out.mu.tau) <= 1e-8 * (1.0 + std::abs(out.mu.tau)))
      candidates.push_back(static_cast<int>(i));
  }
  if (candidates.size() != 1)
    throw Error(ErrorKind::Inconsistent, "expected exactly one positive solution with sigma = sigma_mu, found " +
                                             std::to_string(candidates.size()));
  out.matched = candidates[0];
  out.max_abs_diff = max_diff(one_shift_transform(out.set.solutions[static_cast<size_t>(out.matched)], c), mu);
  if (!(out.max_abs_diff <= 1e-8))
    throw Error(ErrorKind::Inconsistent, "matched solution differs from S_mu by " + std::to_string(out.max_abs_diff));

  for (size_t i = 0; i < out.set.solutions.size(); ++i) {
    const auto& s = out.set.solutions[i];
    if (!out.report.per_solution[i].is_positive || s.coincident) continue;
    if (std::abs(s.sigma + out.mu.sigma) <= 1e-8 * (1.0 + std::abs(out.mu.sigma)))
      out.negated_sigma_matches = out.negated_sigma_matches || max_diff(one_shift_transform(s, c), mu) <= 1e-8;
    if (static_cast<int>(i) == out.matched) continue;
    out.others.push_back(static_cast<int>(i));
    const DensitySpec d = decompose_measure(one_shift_transform(s, c));
    out.others_have_atoms.push_back(!d.atoms.empty());
  }
  return out;
}

AtomExtension atom_extension(const Poly& Q, double c, const std::vector<Atom>& atoms, bool signed_mode) {
  const Poly q = Q.trimmed(1e-14).real_part();
  const SemicircleParam param(c);
  const double e = param.edge();

  std::vector<Root> real_roots;
  if (q.degree() >= 1)
    for (const auto& r : poly_roots(q).roots)
      if (real_root(r.location)) real_roots.push_back({r.location.real(), r.multiplicity});

  double weight_sum = 0.0;
  std::vector<Atom> placed;
  for (const auto& at : atoms) {
    const auto it = std::find_if(real_roots.begin(), real_roots.end(), [&](const Root& r) {
      return std::abs(r.location.real() - at.location) <= 1e-8 * (1.0 + std::abs(at.location));
    });
    if (it == real_roots.end()) throw Error(ErrorKind::BadAtomSite, "no real root of Q at " + std::to_string(at.location));
    if (it->multiplicity != 1) throw Error(ErrorKind::BadAtomSite, "atom site is a multiple root of Q");
    if (std::abs(at.location) < e * (1.0 - 1e-12)) throw Error(ErrorKind::BadAtomSite, "atom site inside I_c");
    if (!signed_mode && at.weight < 0.0) throw Error(ErrorKind::NotPositive, "negative atom weight");
    placed.push_back({it->location.real(), at.weight});
    weight_sum += at.weight;
  }

  const ResidueTransform base(q, c);
  double scale = 1.0;
  if (!signed_mode) {
    const double mass = normalize_series(q, c);
    scale = (1.0 - weight_sum) / mass;
    if (!(scale > 0.0)) throw Error(ErrorKind::NotPositive, "atom weights leave no room for the continuum");
  }

  const AlgebraicStieltjes s0 = base.to_algebraic();
  Poly F = s0.F() * scale;
  for (const auto& at : placed) F -= at.weight * q.deflate(at.location).first;

  AtomExtension out{DensitySpec{}, AlgebraicStieltjes(F, s0.kappa() * scale, q, param), scale};
  out.spec.c = param;
  out.spec.Q = q * (1.0 / scale);
  out.spec.atoms = placed;
  out.spec.signed_mode = signed_mode;
  out.spec.validate();
  return out;
}

}  // namespace semiroots
