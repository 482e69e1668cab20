#include "semiroots/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>

#include "semiroots/error.hpp"
#include "semiroots/inversion.hpp"
#include "semiroots/perturbation.hpp"
#include "semiroots/residue.hpp"
#include "semiroots/shift.hpp"

namespace semiroots {

namespace {

using Rng = std::mt19937_64;

double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

double rel(Cplx got, Cplx want) { return std::abs(got - want) / std::max(1.0, std::abs(want)); }

template <typename... Args>
std::string fmt(const char* f, Args... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

CriterionResult result(int id, const char* name, bool pass, std::string detail) {
  return {id, name, pass, std::move(detail)};
}

std::pair<Cplx, Cplx> roots_of_G0(Cplx alpha, Cplx beta, double c) {
  const Cplx A = 1.0 - 2.0 * beta;
  const Cplx B = -2.0 * alpha * (1.0 - beta);
  const Cplx C = alpha * alpha + 4.0 * c * beta * beta;
  const Cplx d = std::sqrt(B * B - 4.0 * A * C);
  return {(-B + d) / (2.0 * A), (-B - d) / (2.0 * A)};
}

// sup |f - g| over a fixed set of off-axis points
template <typename F, typename G>
double max_diff(const F& f, const G& g, const std::vector<Cplx>& pts, bool relative) {
  double m = 0.0;
  for (Cplx w : pts) m = std::max(m, relative ? rel(f(w), g(w)) : std::abs(f(w) - g(w)));
  return m;
}

}  // namespace

Cplx haagerup_transform(double r, double lambda, Cplx w) {
  const double c = r * (1.0 - r);
  const double d = lambda - 1.0 / lambda;
  const Cplx root = sqrt_branch(w, SemicircleParam(c));
  const Cplx n = 2.0 / d * (1.0 - w * w) + (2.0 * r - 1.0) * w + root;
  return d / 2.0 * n / ((1.0 - w * w) * (r * lambda + (1.0 - r) / lambda - w));
}

AlgebraicStieltjes haagerup_algebraic(double r, double lambda) {
  const double d = lambda - 1.0 / lambda;
  const Poly one_minus_w2({1.0, 0.0, -1.0});
  const Poly F = one_minus_w2 + Poly({0.0, d / 2.0 * (2.0 * r - 1.0)});
  const Poly G = one_minus_w2 * Poly({r * lambda + (1.0 - r) / lambda, -1.0});
  return AlgebraicStieltjes(F, d / 2.0, G, SemicircleParam(r * (1.0 - r)));
}

JacobiParams haagerup_params(double r, double lambda) {
  JacobiParams j;
  j.a = {1.0 / lambda, -r / lambda};
  j.bsq = {r * (1.0 - 1.0 / (lambda * lambda)), r * (1.0 - r)};
  j.tail = Tail::semicircular(r * (1.0 - r));
  return j;
}

std::vector<CorpusDensity> density_corpus() {
  return {
      {"semicircle", Poly::constant(2.0), 1.0},
      {"simple pole right", Poly({-3.0, 1.0}) * -1.0, 1.0},
      {"symmetric poles", Poly({-9.0, 0.0, 1.0}) * -1.0, 1.0},
      {"conjugate poles", Poly({5.0, -2.0, 1.0}), 1.0},
      {"arcsine", Poly({4.0, 0.0, -1.0}), 1.0},
      {"double pole", Poly::from_roots(std::vector<Cplx>{3.0, 3.0}), 1.0},
      {"quartic", Poly::from_roots(std::vector<Cplx>{-3.5, 2.8, {0.5, 2.5}, {0.5, -2.5}}), 1.2},
  };
}

std::vector<Cplx> off_axis_points(int n, std::uint64_t seed, double spread) {
  Rng rng(seed);
  std::vector<Cplx> out;
  for (int k = 0; k < n; ++k) {
    const double re = uniform(rng, -spread, spread);
    const double im = uniform(rng, 0.2, spread);
    out.emplace_back(re, k % 2 == 0 ? im : -im);
  }
  return out;
}

CriterionResult check_branch(const VerifyOptions& opt) {
  Rng rng(opt.seed + 1);
  const double eps = 1e-7;
  double worst = 0.0;
  for (int k = 0; k < 200; ++k) {
    const double c = uniform(rng, 0.1, 3.0);
    const double e = 2.0 * std::sqrt(c);
    const double x = uniform(rng, -e, e);
    const double want = std::sqrt(4.0 * c - x * x);
    const SemicircleParam p(c);
    worst = std::max(worst, std::abs(sqrt_branch(Cplx(x, eps), p) - Cplx(0.0, want)));
    worst = std::max(worst, std::abs(sqrt_branch(Cplx(x, -eps), p) - Cplx(0.0, -want)));
  }
  int sign_errors = 0;
  for (int k = 0; k < 200; ++k) {
    const double c = uniform(rng, 0.1, 3.0);
    const double x = (k % 2 ? 1.0 : -1.0) * (2.0 * std::sqrt(c) + uniform(rng, 1e-6, 5.0));
    const Cplx v = sqrt_branch(x, SemicircleParam(c));
    if (v.imag() != 0.0 || (v.real() > 0.0) != (x > 0.0)) ++sign_errors;
  }
  return result(1, "branch correctness", worst <= 1e-3 && sign_errors == 0,
                fmt("max boundary error %.3e over 200 points, %d exterior sign errors", worst, sign_errors));
}

CriterionResult check_quotient_example(const VerifyOptions& opt) {
  Rng rng(opt.seed + 2);
  double worst = 0.0;
  int done = 0;
  while (done < 50) {
    const double c = uniform(rng, 0.2, 2.0);
    const double a = (rng() % 2 ? 1.0 : -1.0) * (2.0 * std::sqrt(c) + uniform(rng, 0.1, 2.0));
    const double b = (a > 0 ? 1.0 : -1.0) * uniform(rng, 0.2, 4.0);
    const double ab2c = a * b - 2.0 * c;
    if (ab2c < 0.2) continue;
    ++done;
    // S = (1/b)(b - w + sqrt(w^2 - 4c)) / (a - w)
    const AlgebraicStieltjes s(Poly({1.0, -1.0 / b}), 1.0 / b, Poly({a, -1.0}), SemicircleParam(c));
    const JacobiParams j = extract_jacobi(series_of(s, 8), 2);
    worst = std::max(worst, rel(std::sqrt(j.bsq[0]), std::abs(std::sqrt(2.0 * c * ab2c) / b)));
    worst = std::max(worst, rel(j.a[1], -(b * b - 2.0 * a * b + 4.0 * c) * c / (ab2c * b)));
  }
  return result(2, "quotient example", worst <= 1e-8, fmt("max relative error %.3e over %d instances", worst, done));
}

CriterionResult check_haagerup(const VerifyOptions& opt) {
  Rng rng(opt.seed + 3);
  double worst = 0.0;
  for (int k = 0; k < 20; ++k) {
    const double r = uniform(rng, 0.05, 0.95);
    double lam = 0.0;
    do lam = uniform(rng, -3.0, 3.0);
    while (std::abs(lam) < 0.2 || std::abs(std::abs(lam) - 1.0) < 0.05);
    const JacobiParams j = haagerup_params(r, lam);
    const auto pts = off_axis_points(50, opt.seed + 100 + static_cast<unsigned>(k));
    worst = std::max(worst, max_diff([&](Cplx w) { return eval_cfrac(j, w); },
                                     [&](Cplx w) { return haagerup_transform(r, lam, w); }, pts, true));
  }
  return result(3, "two-level expansion", worst <= 1e-9, fmt("max relative error %.3e over 20 (r, lambda) x 50 points", worst));
}

CriterionResult check_one_shift(const VerifyOptions& opt) {
  Rng rng(opt.seed + 4);
  int misses = 0, runs = 0;
  while (runs < 500) {
    const double c = uniform(rng, 0.2, 1.2);
    const Cplx alpha(uniform(rng, -2.0, 2.0), runs % 3 == 0 ? uniform(rng, -1.0, 1.0) : 0.0);
    const Cplx beta(uniform(rng, 0.1, 1.1), runs % 5 == 0 ? uniform(rng, -0.3, 0.3) : 0.0);
    if (std::abs(1.0 - 2.0 * beta) < 0.05) continue;
    ++runs;
    const auto [a, b] = roots_of_G0(alpha, beta, c);
    const auto set = one_shift_from_roots(a, b, c);
    const bool hit = std::any_of(set.solutions.begin(), set.solutions.end(), [&](const OneShiftSolution& s) {
      return s.valid && std::abs(s.alpha - alpha) <= 1e-8 * (1.0 + std::abs(alpha)) &&
             std::abs(s.beta - beta) <= 1e-8 * (1.0 + std::abs(beta));
    });
    if (!hit) ++misses;
  }

  // counts: 2 of 4 for same-sign real roots, 4 of 4 for opposite signs, 1 for a conjugate pair
  int wrong = 0;
  for (int k = 0; k < 100; ++k) {
    const double c = uniform(rng, 0.2, 2.0);
    const double e = 2.0 * std::sqrt(c);
    Cplx a, b;
    int want = 0;
    if (k % 3 == 2) {
      a = Cplx(uniform(rng, -3.0, 3.0), uniform(rng, 0.1, 3.0));
      b = std::conj(a);
      want = 1;
    } else {
      const double x = e + uniform(rng, 0.05, 3.0);
      double y = e + uniform(rng, 0.05, 3.0);
      if (std::abs(x - y) < 1e-3) y += 0.1;
      const double sx = rng() % 2 ? 1.0 : -1.0;
      a = sx * x;
      b = (k % 3 == 0 ? sx : -sx) * y;
      if (std::abs(a + b) < 1e-3) b += 0.1 * sx;
      want = k % 3 == 0 ? 2 : 4;
    }
    const auto rep = classify_positivity(one_shift_from_roots(a, b, c));
    if (rep.positive != want || rep.total != 4) ++wrong;
  }
  return result(4, "one-shift roundtrip and counts", misses == 0 && wrong == 0,
                fmt("%d/500 roundtrip misses, %d/100 count mismatches", misses, wrong));
}

CriterionResult check_two_shift(const VerifyOptions& opt) {
  Rng rng(opt.seed + 5);
  const TwoShiftFamily families[] = {
      TwoShiftFamily::Deg4Symmetric,   TwoShiftFamily::Deg4AlphaFree,   TwoShiftFamily::Deg4BetaFree,
      TwoShiftFamily::Deg3GammaZero,   TwoShiftFamily::Deg3CriticalZeta, TwoShiftFamily::Deg3ZeroZeta,
      TwoShiftFamily::Deg3GammaLambda, TwoShiftFamily::Deg3GammaZetaLambda};
  double root_err = 0.0, closed_err = 0.0;
  std::string short_families;
  for (auto fam : families) {
    int ok = 0;
    for (int attempt = 0; ok < 100 && attempt < 2000; ++attempt) {
      const double c = uniform(rng, 0.3, 1.3);
      Cplx zeta;
      if (fam == TwoShiftFamily::Deg3CriticalZeta) zeta = 2.0 * std::sqrt(c);
      else if (fam == TwoShiftFamily::Deg3ZeroZeta) zeta = 0.0;
      else if (attempt % 4 == 0) zeta = Cplx(0.0, uniform(rng, 0.1, 3.0));
      else zeta = uniform(rng, -4.0, 4.0);
      const Cplx free = fam == TwoShiftFamily::Deg4Symmetric || fam == TwoShiftFamily::Deg4BetaFree
                            ? Cplx(uniform(rng, 0.05, 1.3))
                            : Cplx(uniform(rng, -2.0, 2.0));
      std::vector<TwoShiftSolution> sols;
      try {
        sols = is_degree3(fam) ? two_shift_deg3(zeta, c, fam, free) : two_shift_even_quartic(zeta, c, fam, free);
      } catch (const Error&) {
        continue;
      }
      if (sols.empty()) continue;
      // delta near zero is not a second shift
      if (std::any_of(sols.begin(), sols.end(), [](const TwoShiftSolution& s) { return std::abs(s.delta) < 1e-3; })) continue;
      ++ok;
      const auto pts = off_axis_points(10, opt.seed + static_cast<unsigned>(attempt));
      for (const auto& s : sols) {
        const auto closed = two_shift_closed(s.alpha, s.beta, s.gamma, s.delta, c);
        const auto roots = poly_roots(closed.G()).roots;
        for (Cplx z : {zeta, -zeta}) {
          double best = 1e300;
          for (const auto& r : roots) best = std::min(best, std::abs(r.location - z));
          root_err = std::max(root_err, best / (1.0 + std::abs(z)));
        }
        const auto composed = [&](Cplx w) {
          const Cplx base = -w + sqrt_branch(w, SemicircleParam(c));
          return shift_value(shift_value(base, {s.alpha, s.beta}, w), {s.gamma, s.delta}, w);
        };
        closed_err = std::max(closed_err, max_diff(closed, composed, pts, true));
      }
    }
    if (ok < 100) short_families += std::string(" ") + std::string(to_string(fam));
  }

  // the (r, lambda) transform is the member zeta = 1 of the gamma = zeta^2 / lambda family
  double cross = 0.0;
  int cross_missing = 0;
  for (int k = 0; k < 20; ++k) {
    const double r = uniform(rng, 0.05, 0.95);
    double lam = 0.0;
    do lam = uniform(rng, -3.0, 3.0);
    while (std::abs(lam) < 0.2 || std::abs(std::abs(lam) - 1.0) < 0.05);
    const double c = r * (1.0 - r);
    const auto sols = two_shift_deg3(1.0, c, TwoShiftFamily::Deg3GammaZetaLambda, lam);
    const auto it = std::find_if(sols.begin(), sols.end(), [&](const TwoShiftSolution& s) { return std::abs(s.r - r) < 1e-9; });
    if (it == sols.end()) {
      ++cross_missing;
      continue;
    }
    const auto closed = two_shift_closed(it->alpha, it->beta, it->gamma, it->delta, c);
    cross = std::max(cross, max_diff(closed, [&](Cplx w) { return haagerup_transform(r, lam, w); },
                                     off_axis_points(50, opt.seed + 500 + static_cast<unsigned>(k)), true));
  }

  const bool pass = short_families.empty() && root_err <= 1e-8 && closed_err <= 1e-9 && cross <= 1e-8 && cross_missing == 0;
  std::string detail = fmt("8 families x 100 seeds: root error %.3e, closed vs composed %.3e; cross-check %.3e", root_err,
                           closed_err, cross);
  if (!short_families.empty()) detail += "; too few feasible draws:" + short_families;
  if (cross_missing) detail += fmt("; %d cross-check members missing", cross_missing);
  return result(5, "two-shift families", pass, detail);
}

CriterionResult check_residue(const VerifyOptions& opt) {
  double quad_err = 0.0;
  const auto pts = off_axis_points(20, opt.seed + 6);
  const auto corpus = density_corpus();
  for (const auto& d : corpus) {
    const auto t = stieltjes_from_density(d.Q, d.c);
    DensitySpec spec;
    spec.c = SemicircleParam(d.c);
    spec.Q = d.Q;
    spec.signed_mode = true;
    for (Cplx w : pts) quad_err = std::max(quad_err, std::abs(t(w) - stieltjes_numeric(spec, w)));
  }

  // R_Q: w/N for a constant, 1/N for N(w - a), zero from degree two on
  Rng rng(opt.seed + 7);
  bool closed = true;
  for (int k = 0; k < 20; ++k) {
    const double c = uniform(rng, 0.2, 2.0);
    const double N = uniform(rng, 0.5, 3.0) * (k % 2 ? 1.0 : -1.0);
    const double a = 2.0 * std::sqrt(c) + uniform(rng, 0.1, 2.0);
    const Poly r0 = residue_polynomial(Poly::constant(N), c);
    const Poly r1 = residue_polynomial(Poly({-a * N, N}), c);
    const Poly r2 = residue_polynomial(Poly({uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0), N}), c);
    const double tol = 4.0 * std::numeric_limits<double>::epsilon() / std::abs(N);
    closed = closed && r0.degree() == 1 && std::abs(r0[0]) == 0.0 && std::abs(r0[1] - 1.0 / N) <= tol;
    closed = closed && r1.degree() == 0 && std::abs(r1[0] - 1.0 / N) <= tol;
    closed = closed && r2.is_zero();
  }

  double contour = 0.0;
  for (size_t i : {0u, 1u, 3u}) {
    const Poly R = residue_polynomial(corpus[i].Q, corpus[i].c);
    for (Cplx w : {Cplx(0.5, 0.5), Cplx(-1.0, 2.0), Cplx(3.0, -1.0)})
      contour = std::max(contour, std::abs(contour_residue(corpus[i].Q, corpus[i].c, w) - R(w)));
  }
  return result(6, "residue transform", quad_err <= 1e-7 && closed && contour <= 1e-6,
                fmt("quadrature %.3e over 7 densities x 20 points, R_Q closed forms %s, contour %.3e", quad_err,
                    closed ? "exact" : "MISMATCH", contour));
}

CriterionResult check_normalization(const VerifyOptions& opt) {
  Rng rng(opt.seed + 8);
  std::vector<AlgebraicStieltjes> transforms;

  // positive one-shift solutions for each root configuration
  for (int k = 0; k < 12; ++k) {
    const double c = uniform(rng, 0.3, 1.5);
    const double e = 2.0 * std::sqrt(c);
    Cplx a, b;
    if (k % 3 == 2) {
      a = Cplx(uniform(rng, -2.0, 2.0), uniform(rng, 0.3, 2.0));
      b = std::conj(a);
    } else {
      a = e + uniform(rng, 0.2, 2.0);
      b = (k % 3 == 0 ? 1.0 : -1.0) * (e + uniform(rng, 0.2, 2.0));
    }
    const auto set = one_shift_from_roots(a, b, c);
    const auto rep = classify_positivity(set);
    for (size_t i = 0; i < set.solutions.size(); ++i)
      if (rep.per_solution[i].is_positive && !set.solutions[i].coincident)
        transforms.push_back(shift_once(two_rho(c), {set.solutions[i].alpha.real(), set.solutions[i].beta.real()}));
  }
  // normalized densities
  for (const Poly& q : {Poly({-3.0, 1.0}), Poly({3.0, 1.0}), Poly({-12.0, 1.0, 1.0}), Poly({5.0, -2.0, 1.0})}) {
    const double N = normalize_density(q, 1.0);
    transforms.push_back(stieltjes_from_density(q * N, 1.0).to_algebraic());
  }
  // densities with atoms
  const Poly Q = Poly({-9.0, 0.0, 1.0}) * normalize_quadratic(-3.0, 3.0, 1.0);
  for (int k = 0; k < 4; ++k)
    transforms.push_back(atom_extension(Q, 1.0, {{-3.0, uniform(rng, 0.0, 0.4)}, {3.0, uniform(rng, 0.0, 0.4)}}).transform);
  // two-level family
  for (int k = 0; k < 4; ++k) {
    const double r = uniform(rng, 0.1, 0.9);
    transforms.push_back(haagerup_algebraic(r, uniform(rng, 1.2, 3.0)));
  }

  double s1 = 0.0, mass = 0.0;
  for (const auto& t : transforms) {
    s1 = std::max(s1, std::abs(series_of(t, 2).s(1) + 1.0));
    mass = std::max(mass, std::abs(total_mass(decompose_measure(t)) - 1.0));
  }

  // each normalized density is reproduced by exactly one positive one-shift solution
  int instances = 0, failures = 0, extra = 0, extra_without_atoms = 0;
  std::string sign_note;
  for (int k = 0; k < 12; ++k) {
    const double c = uniform(rng, 0.3, 1.5);
    const double e = 2.0 * std::sqrt(c);
    Cplx a, b;
    if (k % 3 == 2) {
      a = Cplx(uniform(rng, -2.0, 2.0), uniform(rng, 0.3, 2.0));
      b = std::conj(a);
    } else {
      a = e + uniform(rng, 0.2, 2.0);
      b = (k % 3 == 0 ? 1.0 : -1.0) * (e + uniform(rng, 0.2, 2.0));
    }
    ++instances;
    try {
      const auto m = one_shift_measure_match(a, b, c);
      extra += static_cast<int>(m.others.size());
      for (bool at : m.others_have_atoms) extra_without_atoms += at ? 0 : 1;
      if (m.negated_sigma_matches) sign_note = " (a sigma = -sigma_mu solution also matched)";
    } catch (const Error&) {
      ++failures;
    }
  }
  const bool pass = s1 <= 1e-8 && mass <= 1e-7 && failures == 0 && extra_without_atoms == 0;
  return result(7, "normalization and decomposition", pass,
                fmt("%zu transforms: |s_1 + 1| %.3e, |mass - 1| %.3e; unique match in %d/%d, %d extra solutions, %d without atoms",
                    transforms.size(), s1, mass, instances - failures, instances, extra, extra_without_atoms) +
                    sign_note);
}

CriterionResult check_perturbation(const VerifyOptions& opt) {
  Rng rng(opt.seed + 9);
  // entry formulas against the rank-three update done densely
  double entry_err = 0.0;
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 3 + trial % 5;
    TriJacobi t;
    t.n = n;
    for (int k = 0; k < n; ++k) t.diag.push_back(uniform(rng, -1.0, 1.0));
    for (int k = 0; k + 1 < n; ++k) t.offdiag.push_back(uniform(rng, 0.2, 1.5));
    const PerturbStep st{trial % 2, uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0)};
    std::vector<double> J(static_cast<size_t>(n * n), 0.0);
    auto at = [&](int i, int j) -> double& { return J[static_cast<size_t>(i * n + j)]; };
    for (int k = 0; k < n; ++k) at(k, k) = t.diag[k];
    for (int k = 0; k + 1 < n; ++k) at(k, k + 1) = at(k + 1, k) = t.offdiag[k];
    std::vector<double> Ju(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) Ju[i] = at(i, st.k);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        at(i, j) -= st.p * (i == st.k && j == st.k) + st.q * Ju[i] * (j == st.k) + st.q * (i == st.k) * Ju[j];
    const TriJacobi r = phi_k(t, st);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const double got = i == j ? r.diag[i] : std::abs(i - j) == 1 ? r.offdiag[std::min(i, j)] : 0.0;
        entry_err = std::max(entry_err, std::abs(got - at(i, j)));
      }
  }
  // the level-0 display on J_1
  const TriJacobi d0 = phi_k(semicircle_matrix(1.0, 5), {0, -1.0, 1.0 - std::sqrt(0.5)});
  entry_err = std::max(entry_err, std::abs(d0.diag[0] - 1.0) + std::abs(d0.offdiag[0] - std::sqrt(0.5)));

  // truncated resolvents against the closed forms
  const Cplx w(0.0, 2.0);
  double one_err = 0.0, two_err = 0.0;
  bool monotone = true;
  for (int k = 0; k < 5; ++k) {
    const double c = uniform(rng, 0.3, 1.5);
    const double alpha = uniform(rng, -1.0, 1.0), beta = uniform(rng, 0.1, 1.2);
    const double gamma = uniform(rng, -1.0, 1.0), delta = uniform(rng, 0.1, 1.2);
    const auto one = shift_once(two_rho(c), {alpha, beta});
    const auto two = two_shift_closed(alpha, beta, gamma, delta, c);
    const auto s1 = one_shift_perturbation(c, alpha, beta);
    const auto [t0, t1] = two_shift_perturbation(c, alpha, beta, gamma, delta);
    double prev1 = 1e300, prev2 = 1e300;
    for (int n : {50, 100, 200, 400}) {
      const double e1 = std::abs(resolvent00(phi_k(semicircle_matrix(c, n), s1), w) - one(w));
      const double e2 = std::abs(resolvent00(apply_steps(semicircle_matrix(c, n), {t0, t1}), w) - two(w));
      // past machine precision the sequence only fluctuates at rounding level
      monotone = monotone && e1 <= prev1 + 1e-13 && e2 <= prev2 + 1e-13;
      prev1 = e1;
      prev2 = e2;
    }
    one_err = std::max(one_err, prev1);
    two_err = std::max(two_err, prev2);
  }
  const bool pass = entry_err <= 1e-14 && one_err <= 1e-4 && two_err <= 1e-4 && monotone;
  return result(8, "perturbation", pass,
                fmt("entry error %.3e; N = 400 at w = 2i: one-shift %.3e, two-shift %.3e; decay %s", entry_err, one_err,
                    two_err, monotone ? "monotone" : "NOT monotone"));
}

CriterionResult check_moments(const VerifyOptions& opt) {
  Rng rng(opt.seed + 10);
  std::vector<double> cat = {1.0};
  for (int n = 1; n <= 6; ++n) {
    double sum = 0.0;
    for (int i = 0; i < n; ++i) sum += cat[i] * cat[n - 1 - i];
    cat.push_back(sum);
  }
  double worst = 0.0;
  for (int trial = 0; trial < 10; ++trial) {
    const double c = trial == 0 ? 1.0 : uniform(rng, 0.1, 3.0);
    const auto s = series_of(AlgebraicStieltjes::semicircle(c), 14);
    for (int k = 0; k <= 6; ++k) {
      const double want = std::pow(c, k) * cat[k];
      worst = std::max(worst, std::abs(-s.s(2 * k + 1) - want) / want);
      worst = std::max(worst, std::abs(s.s(2 * k + 2)) / want);
    }
  }
  return result(9, "semicircle moments", worst <= 1e-10, fmt("max relative error %.3e for k <= 6", worst));
}

CriterionResult run_check(int id, const VerifyOptions& opt) {
  using Fn = CriterionResult (*)(const VerifyOptions&);
  static const Fn table[] = {check_branch,   check_quotient_example, check_haagerup,
                             check_one_shift, check_two_shift,       check_residue,
                             check_normalization, check_perturbation, check_moments};
  static const char* names[] = {"branch correctness", "quotient example", "two-level expansion",
                                "one-shift roundtrip and counts", "two-shift families", "residue transform",
                                "normalization and decomposition", "perturbation", "semicircle moments"};
  if (id < 1 || id > 9) throw Error(ErrorKind::OutOfRange, "criterion id must be 1..9");
  try {
    return table[id - 1](opt);
  } catch (const std::exception& e) {
    return {id, names[id - 1], false, std::string("exception: ") + e.what()};
  }
}

std::vector<CriterionResult> run_all_checks(const VerifyOptions& opt) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= 9; ++id) out.push_back(run_check(id, opt));
  return out;
}

}  // namespace semiroots
