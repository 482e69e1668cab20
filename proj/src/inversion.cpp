#include "semiroots/inversion.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "semiroots/shift.hpp"
#include "semiroots/stieltjes.hpp"

namespace semiroots {

namespace {

constexpr double kRealTol = 1e-9;

bool near_real(Cplx z) { return std::abs(z.imag()) <= kRealTol * std::max(1.0, std::abs(z.real())); }
bool near(Cplx x, Cplx y, double tol) { return std::abs(x - y) <= tol * (1.0 + std::abs(x) + std::abs(y)); }

Poly F0_of(Cplx alpha, Cplx beta) { return Poly({alpha, -(1.0 - beta)}); }
Poly G0_of(Cplx alpha, Cplx beta, double c) {
  return Poly({alpha * alpha + 4.0 * c * beta * beta, -2.0 * alpha * (1.0 - beta), 1.0 - 2.0 * beta});
}

OneShiftSolution make_solution(Cplx alpha, Cplx beta, Cplx sigma, std::string label, Cplx a, Cplx b, double c) {
  OneShiftSolution s;
  s.alpha = alpha;
  s.beta = beta;
  s.sigma = sigma;
  s.label = std::move(label);
  s.F0 = F0_of(alpha, beta);
  s.G0 = G0_of(alpha, beta, c);
  s.multiplier = 1.0 - 2.0 * beta;
  if (beta == Cplx{} || std::abs(beta) < 1e-14) {
    s.valid = false;
    s.reason = "beta = 0 is not a shift";
    s.residual = std::numeric_limits<double>::quiet_NaN();
    return s;
  }
  if (std::abs(s.multiplier) < 1e-12) {
    s.valid = false;
    s.reason = "beta = 1/2 lowers the degree of G0";
    s.residual = std::numeric_limits<double>::quiet_NaN();
    return s;
  }
  const Poly target({a * b, -(a + b), 1.0});
  const Poly monic = s.G0 * (1.0 / s.multiplier);
  const Poly diff = monic - target;
  s.residual = diff.max_abs() / std::max(1.0, target.max_abs());
  return s;
}

void flag_coincident(OneShiftSolutionSet& set) {
  for (size_t i = 0; i < set.solutions.size(); ++i)
    for (size_t j = 0; j < i; ++j) {
      auto& si = set.solutions[i];
      const auto& sj = set.solutions[j];
      if (!sj.coincident && near(si.alpha, sj.alpha, 1e-9) && near(si.beta, sj.beta, 1e-9)) {
        si.coincident = true;
        set.degenerate = true;
        break;
      }
    }
}

const char* sign_label(int s) { return s > 0 ? "+" : "-"; }

}  // namespace

Cplx disc_root(Cplx z, double c) {
  const SemicircleParam p(c);
  if (z.imag() == 0.0 && std::abs(z.real()) <= p.edge()) return std::sqrt(z * z - 4.0 * c);
  return sqrt_branch(z, p);
}

int OneShiftSolutionSet::distinct_count() const {
  return static_cast<int>(std::count_if(solutions.begin(), solutions.end(), [](const auto& s) { return !s.coincident; }));
}

OneShiftSolutionSet one_shift_from_roots(Cplx a, Cplx b, double c) {
  const SemicircleParam param(c);
  OneShiftSolutionSet set;
  set.a = a;
  set.b = b;
  set.c = c;
  const double nan = std::numeric_limits<double>::quiet_NaN();

  if (std::abs(a - b) < 1e-9 * (1.0 + std::abs(a))) {
    set.case_label = "double";
    const Cplx m = (a + b) / 2.0;
    const Cplx q = disc_root(m, c);
    if (std::abs(q) < 1e-12 * (1.0 + std::abs(m))) {
      set.degenerate = true;
      auto s = make_solution(m, 0.0, nan, "tangent", m, m, c);
      set.solutions.push_back(std::move(s));
      return set;
    }
    for (int e : {1, -1}) {
      const Cplx alpha = m + static_cast<double>(e) * q;
      const Cplx beta = (4.0 * c - m * m - static_cast<double>(e) * m * q) / (4.0 * c);
      set.solutions.push_back(make_solution(alpha, beta, (1.0 - beta) / beta, sign_label(e), m, m, c));
    }
    flag_coincident(set);
    return set;
  }

  if (std::abs(a + b) < 1e-9 * (1.0 + std::abs(a))) {
    set.case_label = "symmetric";
    const Cplx q = disc_root(a, c);
    for (int e : {1, -1}) {
      const Cplx beta = a / (a + static_cast<double>(e) * q);
      set.solutions.push_back(
          make_solution(0.0, beta, (1.0 - beta) / beta, std::string("alpha=0,") + sign_label(e), a, b, c));
    }
    for (int e : {1, -1})
      set.solutions.push_back(
          make_solution(static_cast<double>(e) * q, 1.0, 0.0, std::string("beta=1,") + sign_label(e), a, b, c));
    flag_coincident(set);
    return set;
  }

  set.case_label = "generic";
  const Cplx qa = disc_root(a, c);
  const Cplx qb = disc_root(b, c);
  for (int s1 : {1, -1})
    for (int s2 : {1, -1}) {
      const Cplx sigma = static_cast<double>(s1) * (qa + static_cast<double>(s2) * qb) / (a - b);
      const std::string label = std::string("(") + sign_label(s1) + "," + sign_label(s2) + ")";
      if (std::abs(sigma + 1.0) < 1e-12) {
        OneShiftSolution s;
        s.sigma = sigma;
        s.label = label;
        s.valid = false;
        s.reason = "sigma = -1 leaves beta undefined";
        set.solutions.push_back(std::move(s));
        continue;
      }
      const Cplx alpha = (a + b) * (sigma - 1.0) / (2.0 * sigma);
      const Cplx beta = 1.0 / (sigma + 1.0);
      set.solutions.push_back(make_solution(alpha, beta, sigma, label, a, b, c));
    }
  flag_coincident(set);
  return set;
}

std::pair<Cplx, Cplx> one_shift_deg1(Cplx root, double c) {
  // alpha^2 - root alpha + c = 0
  const Cplx d = std::sqrt(root * root - 4.0 * c);
  Cplx big = (root + d) / 2.0;
  if (std::abs(root - d) > std::abs(root + d)) big = (root - d) / 2.0;
  if (big == Cplx{}) return {Cplx(0.0, std::sqrt(c)), Cplx(0.0, -std::sqrt(c))};
  return {big, c / big};
}

// ---------------------------------------------------------------------------

std::string_view to_string(TwoShiftFamily f) {
  switch (f) {
    case TwoShiftFamily::Deg4Symmetric: return "deg4-symmetric";
    case TwoShiftFamily::Deg4AlphaFree: return "deg4-alpha-free";
    case TwoShiftFamily::Deg4BetaFree: return "deg4-beta-free";
    case TwoShiftFamily::Deg3GammaZero: return "deg3-gamma-zero";
    case TwoShiftFamily::Deg3CriticalZeta: return "deg3-critical-zeta";
    case TwoShiftFamily::Deg3ZeroZeta: return "deg3-zero-zeta";
    case TwoShiftFamily::Deg3GammaLambda: return "deg3-gamma-lambda";
    case TwoShiftFamily::Deg3GammaZetaLambda: return "deg3-gamma-zeta2-over-lambda";
  }
  return "?";
}

std::optional<TwoShiftFamily> two_shift_family_from_string(std::string_view name) {
  for (auto f : {TwoShiftFamily::Deg4Symmetric, TwoShiftFamily::Deg4AlphaFree, TwoShiftFamily::Deg4BetaFree,
                 TwoShiftFamily::Deg3GammaZero, TwoShiftFamily::Deg3CriticalZeta, TwoShiftFamily::Deg3ZeroZeta,
                 TwoShiftFamily::Deg3GammaLambda, TwoShiftFamily::Deg3GammaZetaLambda})
    if (to_string(f) == name) return f;
  return std::nullopt;
}

bool is_degree3(TwoShiftFamily f) {
  return f != TwoShiftFamily::Deg4Symmetric && f != TwoShiftFamily::Deg4AlphaFree && f != TwoShiftFamily::Deg4BetaFree;
}

namespace {

TwoShiftSolution two(Cplx alpha, Cplx beta, Cplx gamma, Cplx Delta, TwoShiftFamily fam, std::string label, Cplx zeta,
                     double c) {
  TwoShiftSolution s;
  s.alpha = alpha;
  s.beta = beta;
  s.gamma = gamma;
  s.Delta = Delta;
  s.delta = -Delta + alpha * gamma;
  s.family = fam;
  s.label = std::move(label);
  s.zeta = zeta;
  s.c = c;
  return s;
}

void require_delta(const TwoShiftSolution& s) {
  if (std::abs(s.delta) < 1e-14) throw Error(ErrorKind::NotAShift, "delta = 0 does not define a shift step");
}

}  // namespace

std::vector<TwoShiftSolution> two_shift_even_quartic(Cplx zeta, double c, TwoShiftFamily family, Cplx free_value) {
  const SemicircleParam param(c);
  const Cplx q = disc_root(zeta, c);
  std::vector<TwoShiftSolution> out;
  switch (family) {
    case TwoShiftFamily::Deg4Symmetric: {
      const Cplx beta = free_value;
      if (std::abs(beta - 0.5) < 1e-14) throw Error(ErrorKind::WrongFamily, "an even quartic G needs beta != 1/2");
      if (beta == Cplx{}) throw Error(ErrorKind::Degenerate, "beta = 0");
      for (int e : {1, -1}) {
        const Cplx Delta = -(1.0 - beta) * zeta * zeta + static_cast<double>(e) * beta * zeta * q;
        auto s = two(0.0, beta, 0.0, Delta, family, sign_label(e), zeta, c);
        s.free_param = {{"beta", beta}};
        out.push_back(std::move(s));
      }
      break;
    }
    case TwoShiftFamily::Deg4AlphaFree: {
      const Cplx alpha = free_value;
      if (alpha == Cplx{}) throw Error(ErrorKind::WrongFamily, "this family needs alpha != 0");
      for (int e : {1, -1}) {
        const Cplx beta = -(zeta * zeta - 4.0 * c + static_cast<double>(e) * zeta * q) / (4.0 * c);
        if (std::abs(beta - 0.5) < 1e-12 || std::abs(beta) < 1e-14) continue;
        const Cplx gamma = -alpha * (1.0 - beta) / (1.0 - 2.0 * beta);
        auto s = two(alpha, beta, gamma, -4.0 * c * (1.0 - beta), family, sign_label(e), zeta, c);
        s.free_param = {{"alpha", alpha}};
        out.push_back(std::move(s));
      }
      break;
    }
    case TwoShiftFamily::Deg4BetaFree: {
      const Cplx beta = free_value;
      if (std::abs(beta - 0.5) < 1e-14) throw Error(ErrorKind::WrongFamily, "an even quartic G needs beta != 1/2");
      if (beta == Cplx{}) throw Error(ErrorKind::Degenerate, "beta = 0");
      for (int e : {1, -1}) {
        const double s = e;
        const Cplx alpha = s * q * (1.0 - 2.0 * beta) / beta;
        const Cplx gamma = -s * q * (1.0 - beta) / beta;
        auto sol = two(alpha, beta, gamma, -4.0 * c * (1.0 - beta), family, sign_label(e), zeta, c);
        sol.free_param = {{"beta", beta}};
        out.push_back(std::move(sol));
      }
      break;
    }
    default:
      throw Error(ErrorKind::WrongFamily, std::string(to_string(family)) + " is a degree-3 family");
  }
  for (const auto& s : out) require_delta(s);
  return out;
}

std::pair<Cplx, Cplx> r_values(Cplx zeta, double c) {
  if (zeta == Cplx{}) throw Error(ErrorKind::Degenerate, "r is undefined for zeta = 0");
  const Cplx d = std::sqrt(1.0 - 4.0 * c / (zeta * zeta));
  return {(1.0 + d) / 2.0, (1.0 - d) / 2.0};
}

std::vector<TwoShiftSolution> two_shift_deg3(Cplx zeta, double c, TwoShiftFamily family, Cplx free_value) {
  const SemicircleParam param(c);
  const Cplx half = 0.5;
  const Cplx z2 = zeta * zeta;
  std::vector<TwoShiftSolution> out;
  switch (family) {
    case TwoShiftFamily::Deg3GammaZero: {
      if (zeta == Cplx{}) throw Error(ErrorKind::NotAShift, "gamma = 0 family needs zeta != 0 (delta = zeta^2/2)");
      const Cplx q = disc_root(zeta, c);
      if (std::abs(q) < 1e-14) throw Error(ErrorKind::Degenerate, "alpha = 0 when zeta^2 = 4c");
      for (int e : {1, -1}) out.push_back(two(static_cast<double>(e) * q / 2.0, half, 0.0, -z2 / 2.0, family, sign_label(e), zeta, c));
      break;
    }
    case TwoShiftFamily::Deg3CriticalZeta: {
      if (std::abs(z2 - 4.0 * c) > 1e-9 * (1.0 + 4.0 * c))
        throw Error(ErrorKind::WrongFamily, "critical family needs zeta^2 = 4c");
      const Cplx alpha = free_value;
      if (alpha == Cplx{}) throw Error(ErrorKind::Degenerate, "alpha = 0 lowers the degree of G");
      auto s = two(alpha, half, -2.0 * alpha, -2.0 * c, family, "", zeta, c);
      s.free_param = {{"alpha", alpha}};
      out.push_back(std::move(s));
      break;
    }
    case TwoShiftFamily::Deg3ZeroZeta: {
      if (std::abs(zeta) > 1e-12) throw Error(ErrorKind::WrongFamily, "zeta = 0 family needs zeta = 0");
      const Cplx gamma = free_value;
      if (gamma == Cplx{}) throw Error(ErrorKind::NotAShift, "gamma = 0 gives delta = 0");
      for (int e : {1, -1}) {
        const Cplx alpha = -gamma / 2.0 + static_cast<double>(e) * Cplx(0.0, std::sqrt(c));
        auto s = two(alpha, half, gamma, (alpha + gamma / 2.0) * gamma, family, sign_label(e), 0.0, c);
        s.free_param = {{"gamma", gamma}};
        out.push_back(std::move(s));
      }
      break;
    }
    case TwoShiftFamily::Deg3GammaLambda:
    case TwoShiftFamily::Deg3GammaZetaLambda: {
      const Cplx lambda = free_value;
      if (lambda == Cplx{}) throw Error(ErrorKind::Degenerate, "lambda = 0");
      const auto [r1, r2] = r_values(zeta, c);
      int idx = 0;
      for (Cplx r : {r1, r2}) {
        const std::string label = idx++ == 0 ? "r+" : "r-";
        TwoShiftSolution s;
        if (family == TwoShiftFamily::Deg3GammaLambda) {
          const Cplx k = zeta * (r - 0.5);
          s = two(-lambda / 2.0 + k, half, lambda, -z2 / 2.0 + k * lambda, family, label, zeta, c);
        } else {
          s = two(-z2 * r / lambda, half, z2 / lambda, -r * z2, family, label, zeta, c);
        }
        s.r = r;
        s.free_param = {{"lambda", lambda}};
        out.push_back(std::move(s));
      }
      break;
    }
    default:
      throw Error(ErrorKind::WrongFamily, std::string(to_string(family)) + " is a degree-4 family");
  }
  for (const auto& s : out) require_delta(s);
  return out;
}

Cplx remaining_root(const TwoShiftSolution& s) {
  if (std::abs(s.beta - 0.5) > 1e-12 || s.alpha == Cplx{})
    throw Error(ErrorKind::WrongFamily, "remaining root is defined for cubic G only");
  // Sum of the roots of -alpha w^3 + (c + alpha^2 + alpha gamma + Delta) w^2 + ..., minus zeta + (-zeta).
  return (s.c + s.alpha * s.alpha + s.alpha * s.gamma + s.Delta) / s.alpha;
}

std::vector<LambdaCandidate> remaining_root_to_lambda(Cplx root, Cplx zeta, double c, Cplx r, TwoShiftFamily family) {
  Cplx qa;
  Cplx qb;
  Cplx qc;
  const Cplx k = zeta * (r - 0.5);
  if (family == TwoShiftFamily::Deg3GammaZetaLambda) {
    // r lambda^2 - root lambda + zeta^2 (1 - r) = 0
    qa = r;
    qb = -root;
    qc = zeta * zeta * (1.0 - r);
  } else if (family == TwoShiftFamily::Deg3GammaLambda) {
    // lambda^2 - (4k + 2 root) lambda + zeta^2 + 4k root = 0
    qa = 1.0;
    qb = -(4.0 * k + 2.0 * root);
    qc = zeta * zeta + 4.0 * k * root;
  } else {
    throw Error(ErrorKind::WrongFamily, "lambda is only defined for the lambda families");
  }
  if (qa == Cplx{}) throw Error(ErrorKind::Infeasible, "quadratic for lambda degenerates");
  const Cplx disc = qb * qb - 4.0 * qa * qc;
  const Cplx d = std::sqrt(disc);
  std::vector<Cplx> cand;
  bool dbl = false;
  if (std::abs(disc) <= 1e-12 * (std::norm(qb) + 1.0)) {
    cand.push_back(-qb / (2.0 * qa));
    dbl = true;
  } else {
    const Cplx big = std::abs(-qb + d) >= std::abs(-qb - d) ? (-qb + d) / 2.0 : (-qb - d) / 2.0;
    cand.push_back(big / qa);
    cand.push_back(qc / big);
  }
  std::vector<LambdaCandidate> out;
  const Cplx z2 = zeta * zeta;
  for (Cplx lam : cand) {
    if (std::abs(lam) < 1e-14) continue;
    // rebuild the family member without the delta != 0 gate
    TwoShiftSolution s = family == TwoShiftFamily::Deg3GammaLambda
                             ? two(-lam / 2.0 + k, 0.5, lam, -z2 / 2.0 + k * lam, family, "", zeta, c)
                             : two(-z2 * r / lam, 0.5, z2 / lam, -r * z2, family, "", zeta, c);
    if (s.alpha == Cplx{} || !near(remaining_root(s), root, 1e-9)) continue;
    out.push_back({lam, std::abs(s.delta) >= 1e-14, dbl});
  }
  if (out.empty()) throw Error(ErrorKind::Infeasible, "no lambda reproduces the remaining root");
  return out;
}

// ---------------------------------------------------------------------------

bool PositivityReport::consistent() const {
  if (expected_positive && *expected_positive != positive) return false;
  return std::all_of(per_solution.begin(), per_solution.end(),
                     [](const auto& e) { return !e.predicted || *e.predicted == e.is_positive; });
}

PositivityReport classify_positivity(const OneShiftSolutionSet& set) {
  PositivityReport rep;
  for (const auto& s : set.solutions) {
    PositivityEntry e;
    if (!s.valid) {
      e.reasons.push_back(s.reason);
    } else {
      e.is_real = near_real(s.alpha) && near_real(s.beta);
      if (!e.is_real) e.reasons.push_back("complex parameters");
      e.is_positive = e.is_real && s.beta.real() > 0.0;
      if (e.is_real && !e.is_positive) e.reasons.push_back("beta <= 0");
      if (e.is_real && s.sigma == s.sigma) {
        const bool by_sigma = s.sigma.real() > -1.0;
        if (by_sigma != e.is_positive) e.reasons.push_back("sigma > -1 disagrees with beta > 0");
      }
    }
    rep.total += 1;
    rep.real += e.is_real ? 1 : 0;
    rep.positive += e.is_positive ? 1 : 0;
    rep.per_solution.push_back(std::move(e));
  }

  const Cplx a = set.a;
  const Cplx b = set.b;
  const double c = set.c;
  const bool both_real = a.imag() == 0.0 && b.imag() == 0.0;
  if (set.case_label == "generic") {
    if (both_real && a.real() * a.real() > 4.0 * c && b.real() * b.real() > 4.0 * c)
      rep.expected_positive = a.real() * b.real() > 0.0 ? 2 : 4;
    else if (a.imag() != 0.0 && near(a, std::conj(b), 1e-12))
      rep.expected_positive = 1;
  } else if (set.case_label == "symmetric") {
    if (both_real && a.real() * a.real() > 4.0 * c) rep.expected_positive = 4;
    else if (a.real() == 0.0 && b.real() == 0.0) rep.expected_positive = 1;
  } else if (set.case_label == "double" && both_real) {
    rep.expected_positive = a.real() * a.real() > 4.0 * c ? 1 : 0;
  }
  return rep;
}

namespace {

// Closed-form positivity ranges per family. nullopt when no statement covers the input.
std::optional<bool> predicted_positive(const TwoShiftSolution& s) {
  const Cplx z = s.zeta;
  const double c = s.c;
  const bool real_zeta = near_real(z) && z.imag() == 0.0;
  const bool imag_zeta = z.real() == 0.0 && z.imag() != 0.0;
  const double sz = real_zeta ? std::abs(z.real()) : std::abs(z.imag());
  const int label_sign = s.label == "-" ? -1 : 1;

  switch (s.family) {
    case TwoShiftFamily::Deg4Symmetric: {
      if (!near_real(s.beta) || !(s.beta.real() > 0.0)) return false;
      const double beta = s.beta.real();
      const double sigma = (1.0 - beta) / beta;
      if (real_zeta) {
        if (sz * sz < 4.0 * c) return false;
        // delta = (1 - beta) s^2 - e beta s sqrt(s^2 - 4c)
        return sigma > label_sign * std::sqrt(sz * sz - 4.0 * c) / sz;
      }
      if (imag_zeta) {
        if (label_sign < 0) return false;
        return beta > (sz * std::sqrt(sz * sz + 4.0 * c) - sz * sz) / (4.0 * c);
      }
      return std::nullopt;
    }
    case TwoShiftFamily::Deg4AlphaFree: {
      if (!near_real(s.alpha)) return false;
      const double al = s.alpha.real();
      if (real_zeta) {
        if (sz * sz <= 4.0 * c) return false;
        const double q = std::sqrt(sz * sz - 4.0 * c);
        return label_sign < 0 && std::abs(al) < sz - q;
      }
      if (imag_zeta) return label_sign < 0;
      return std::nullopt;
    }
    case TwoShiftFamily::Deg4BetaFree: {
      if (!real_zeta || sz * sz < 4.0 * c || !near_real(s.beta)) return false;
      const double q = std::sqrt(sz * sz - 4.0 * c);
      const double beta = s.beta.real();
      return q / (sz + q) < beta && beta < 1.0;
    }
    case TwoShiftFamily::Deg3GammaZero:
      return real_zeta && sz * sz > 4.0 * c;
    case TwoShiftFamily::Deg3CriticalZeta: {
      if (!near_real(s.alpha)) return false;
      const double a2 = s.alpha.real() * s.alpha.real();
      return 0.0 < a2 && a2 < c;
    }
    case TwoShiftFamily::Deg3ZeroZeta:
      return false;
    case TwoShiftFamily::Deg3GammaLambda: {
      const auto lam = s.free_param->second;
      if (!real_zeta || sz * sz < 4.0 * c || !near_real(lam)) return false;
      return lam.real() * lam.real() < sz * sz;
    }
    case TwoShiftFamily::Deg3GammaZetaLambda: {
      const auto lam = s.free_param->second;
      if (!near_real(lam)) return false;
      if (real_zeta) return sz * sz >= 4.0 * c && lam.real() * lam.real() > sz * sz;
      if (imag_zeta) return s.r.real() < 0.0;
      return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace

PositivityReport classify_positivity(const std::vector<TwoShiftSolution>& sols) {
  PositivityReport rep;
  for (const auto& s : sols) {
    PositivityEntry e;
    e.is_real = near_real(s.alpha) && near_real(s.beta) && near_real(s.gamma) && near_real(s.delta);
    if (!e.is_real) e.reasons.push_back("complex parameters");
    const bool beta_pos = s.beta.real() > 0.0;
    const bool delta_pos = s.delta.real() > 0.0;
    e.is_positive = e.is_real && beta_pos && delta_pos;
    if (e.is_real && !beta_pos) e.reasons.push_back("beta <= 0");
    if (e.is_real && !delta_pos) e.reasons.push_back("delta <= 0");
    e.predicted = predicted_positive(s);
    if (e.predicted && *e.predicted != e.is_positive) e.reasons.push_back("closed-form range disagrees");
    rep.total += 1;
    rep.real += e.is_real ? 1 : 0;
    rep.positive += e.is_positive ? 1 : 0;
    rep.per_solution.push_back(std::move(e));
  }
  return rep;
}

}  // namespace semiroots
