#include "semiroots/stieltjes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace semiroots {

namespace {

constexpr double kPi = std::numbers::pi;

std::string fmt(Cplx z) { return "(" + std::to_string(z.real()) + ", " + std::to_string(z.imag()) + ")"; }

}  // namespace

SemicircleParam::SemicircleParam(double c) : c_(c) {
  if (!(c > 0.0) || !std::isfinite(c)) throw Error(ErrorKind::InvalidArgument, "semicircle parameter c must be > 0");
}

double SemicircleParam::edge() const { return 2.0 * std::sqrt(c_); }

Cplx sqrt_branch(Cplx w, const SemicircleParam& c) {
  const double e = c.edge();
  if (w.imag() == 0.0 && std::abs(w.real()) <= e) throw Error(ErrorKind::OnCut, "w = " + fmt(w) + " lies on I_c");
  // The principal cuts of the two factors cancel outside I_c.
  return std::sqrt(w - e) * std::sqrt(w + e);
}

BoundaryValues boundary_values(double x, const SemicircleParam& c) {
  const double e = c.edge();
  if (!(std::abs(x) < e)) throw Error(ErrorKind::Endpoint, "boundary values need |x| < 2 sqrt(c)");
  const double v = std::sqrt(4.0 * c.value() - x * x);
  return {Cplx(0.0, v), Cplx(0.0, -v)};
}

Cplx rho_star(Cplx w, const SemicircleParam& c) { return (-w - sqrt_branch(w, c)) / 2.0; }

Cplx rho(Cplx w, const SemicircleParam& c) {
  // |rho*| > sqrt(c) off the cut, so dividing avoids the cancellation in -w + sqrt.
  return c.value() / rho_star(w, c);
}

// ---------------------------------------------------------------------------

AlgebraicStieltjes::AlgebraicStieltjes(Poly F, Cplx kappa, Poly G, SemicircleParam c)
    : F_(std::move(F)), kappa_(kappa), G_(std::move(G)), c_(c) {
  if (G_.is_zero()) throw Error(ErrorKind::InvalidArgument, "denominator G is zero");
  if (kappa_ != Cplx{} || F_.is_zero() || G_.degree() < 1 || F_.degree() < 1) return;
  // Rational case: cancel common roots.
  for (const auto& root : poly_roots(G_).roots) {
    for (int k = 0; k < root.multiplicity && F_.degree() >= 1; ++k) {
      const double tol = 1e-9 * F_.norm1() * std::pow(std::max(1.0, std::abs(root.location)), F_.degree());
      if (std::abs(F_(root.location)) > tol) break;
      F_ = F_.deflate(root.location).first;
      G_ = G_.deflate(root.location).first;
    }
  }
}

AlgebraicStieltjes AlgebraicStieltjes::semicircle(double c) {
  return AlgebraicStieltjes(Poly({0.0, -1.0}), 1.0, Poly::constant(2.0 * c), SemicircleParam(c));
}

Cplx AlgebraicStieltjes::operator()(Cplx w) const {
  const Cplx g = G_(w);
  const double pol_tol = 1e-12 * G_.norm1() * std::pow(std::max(1.0, std::abs(w)), std::max(G_.degree(), 0));
  if (std::abs(g) <= pol_tol) throw Error(ErrorKind::PoleAt, "G vanishes at w = " + fmt(w));
  const Cplx root_term = kappa_ == Cplx{} ? Cplx{} : kappa_ * sqrt_branch(w, c_);
  return (F_(w) + root_term) / g;
}

Cplx eval(const AlgebraicStieltjes& s, Cplx w) { return s(w); }

SeriesAtInfinity series_of(const AlgebraicStieltjes& s, int order) {
  const Poly G = s.G().trimmed(1e-14);
  const int work = order + std::max(s.F().degree(), 1) + 2;
  SeriesAtInfinity numerator = SeriesAtInfinity::exact(s.F(), work);
  if (s.kappa() != Cplx{}) numerator = series_add(numerator, series_scale(sqrt_series(s.c(), work), s.kappa()));
  const SeriesAtInfinity inv_g = series_reciprocal(SeriesAtInfinity::exact(G, work));
  return series_mul(numerator, inv_g).truncated(order);
}

// ---------------------------------------------------------------------------

double DensitySpec::density(double t) const {
  if (Q.is_zero() || !(std::abs(t) < c.edge())) return 0.0;
  return std::sqrt(4.0 * c.value() - t * t) / Q(t).real();
}

void DensitySpec::validate() const {
  const double e = c.edge();
  for (const auto& a : atoms) {
    if (std::abs(a.location) < e * (1.0 - 1e-12))
      throw Error(ErrorKind::NotPositive, "atom inside the open interval I_c");
    if (!signed_mode && a.weight < 0.0) throw Error(ErrorKind::NotPositive, "negative atom weight");
  }
  if (Q.is_zero() || signed_mode) return;
  if (!Q.is_real(1e-12)) throw Error(ErrorKind::NotReal, "Q must have real coefficients");
  constexpr int samples = 401;
  for (int k = 1; k < samples; ++k) {
    const double t = -e + 2.0 * e * k / samples;
    if (!(Q(t).real() > 0.0)) throw Error(ErrorKind::NotPositive, "Q is not positive on I_c");
  }
  if (Q.degree() >= 1) {
    for (const auto& r : poly_roots(Q).roots) {
      const bool real = std::abs(r.location.imag()) <= 1e-9 * (1.0 + std::abs(r.location));
      if (real && std::abs(r.location.real()) < e * (1.0 - 1e-9))
        throw Error(ErrorKind::NotPositive, "Q has a root inside I_c");
    }
  }
}

DensitySpec decompose_measure(const AlgebraicStieltjes& s) {
  const Cplx lead = s.G().leading();
  const Poly F = s.F() * (1.0 / lead);
  const Poly G = s.G() * (1.0 / lead);
  const Cplx kappa = s.kappa() / lead;
  if (!F.is_real(1e-9) || !G.is_real(1e-9) || std::abs(kappa.imag()) > 1e-9 * std::max(1.0, std::abs(kappa)))
    throw Error(ErrorKind::NotReal, "transform is not real; no signed measure to decompose");

  const SemicircleParam& c = s.param();
  const double e = c.edge();
  const Poly Gr = G.real_part();
  const double k = kappa.real();

  DensitySpec out;
  out.c = c;
  out.signed_mode = true;
  if (k != 0.0) out.Q = Gr * (kPi / k);

  if (Gr.degree() < 1) return out;
  for (const auto& root : poly_roots(Gr).roots) {
    const Cplx z = root.location;
    if (std::abs(z.imag()) > 1e-7 * (1.0 + std::abs(z))) continue;
    const double x = z.real();
    const int m = root.multiplicity;
    if (std::abs(std::abs(x) - e) <= 1e-7 * (1.0 + e)) {
      // Endpoint zero: sqrt(4c - t^2)/G stays integrable for a simple zero.
      if (m >= 2) throw Error(ErrorKind::HigherOrderRealPole, "multiple root of G at an endpoint of I_c");
      continue;
    }
    if (std::abs(x) < e) {
      if (k == 0.0 && F(x) == Cplx{}) continue;
      throw Error(ErrorKind::RootOnCut, "G vanishes inside I_c at t = " + std::to_string(x));
    }

    // Effective pole order after cancellation with the numerator.
    const Poly Ft = F.real_part().taylor_shift(x);
    const std::vector<Cplx> st = sqrt_taylor(x, c, m + 1);
    const Poly Gt = Gr.taylor_shift(x);
    int vanish = 0;
    if (m >= 2) {
      while (vanish < m) {
        const Cplx nj = Ft[vanish] + k * st[static_cast<size_t>(vanish)];
        const double scale = std::abs(Ft[vanish]) + std::abs(k * st[static_cast<size_t>(vanish)]);
        if (std::abs(nj) > 1e-6 * scale) break;
        ++vanish;
      }
    }
    const int pole_order = m - vanish;
    if (pole_order <= 0) continue;
    if (pole_order >= 2)
      throw Error(ErrorKind::HigherOrderRealPole, "pole of order " + std::to_string(pole_order) + " at t = " +
                                                      std::to_string(x));
    const Cplx numer = Ft[vanish] + k * st[static_cast<size_t>(vanish)];
    const Cplx weight = -numer / Gt[m];
    if (std::abs(weight) <= 1e-10) continue;
    out.atoms.push_back({x, weight.real()});
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

using boost::math::quadrature::gauss_kronrod;

// Integrate a complex function of theta over [-pi/2, pi/2].
template <class Fn>
Cplx integrate_theta(Fn&& fn, const QuadratureConfig& config) {
  double err_re = 0.0;
  double err_im = 0.0;
  const double re = gauss_kronrod<double, 15>::integrate([&](double th) { return fn(th).real(); }, -kPi / 2, kPi / 2,
                                                        config.max_depth, 1e-13, &err_re);
  const double im = gauss_kronrod<double, 15>::integrate([&](double th) { return fn(th).imag(); }, -kPi / 2, kPi / 2,
                                                        config.max_depth, 1e-13, &err_im);
  const Cplx result(re, im);
  if (!std::isfinite(re) || !std::isfinite(im) || std::max(err_re, err_im) > config.abs_tol * std::max(1.0, std::abs(result)))
    throw Error(ErrorKind::Quadrature, "adaptive quadrature did not reach the tolerance");
  return result;
}

// sqrt(4c - t^2) / Q(t) dt with t = e sin(theta), i.e. e^2 cos^2 / Q. Simple zeros of Q
// at the endpoints are divided out analytically, using e -+ t = e cos^2 / (1 +- sin).
class ThetaWeight {
 public:
  ThetaWeight(const Poly& Q, double e) : e_(e), rest_(Q.real_part()) {
    const double tol = 1e-10 * rest_.norm1() * std::pow(std::max(1.0, e), rest_.degree());
    if (rest_.degree() >= 1 && std::abs(rest_(e)) <= tol) {
      rest_ = rest_.deflate(e).first * -1.0;  // Q = (e - t) R
      right_ = true;
    }
    if (rest_.degree() >= 1 && std::abs(rest_(-e)) <= tol) {
      rest_ = rest_.deflate(-e).first;  // Q = (e + t) R
      left_ = true;
    }
    // factored evaluation keeps Q accurate next to zeros sitting just off the cut
    lead_ = rest_.degree() >= 0 ? rest_[rest_.degree()] : Cplx{};
    if (rest_.degree() >= 1) roots_ = poly_roots(rest_).flattened();
  }

  double operator()(double th) const {
    const double sn = std::sin(th);
    const double cs = std::cos(th);
    double num = e_ * e_ * cs * cs;
    if (right_) num = e_ * (1.0 + sn);
    if (left_) num = right_ ? 1.0 : e_ * (1.0 - sn);
    // 1 -+ sin without cancellation near the endpoints
    const double one_minus = sn > 0.0 ? cs * cs / (1.0 + sn) : 1.0 - sn;
    const double one_plus = sn < 0.0 ? cs * cs / (1.0 - sn) : 1.0 + sn;
    Cplx q = lead_;
    for (Cplx z : roots_)
      q *= std::abs(z - e_) < std::abs(z + e_) ? (e_ - z) - e_ * one_minus : (-e_ - z) + e_ * one_plus;
    return num / q.real();
  }

 private:
  double e_;
  Poly rest_;
  Cplx lead_;
  std::vector<Cplx> roots_;
  bool right_ = false;
  bool left_ = false;
};

}  // namespace

Cplx stieltjes_numeric(const DensitySpec& d, Cplx w, const QuadratureConfig& config) {
  const double e = d.c.edge();
  if (w.imag() == 0.0 && std::abs(w.real()) <= e && !d.Q.is_zero())
    throw Error(ErrorKind::OnCut, "stieltjes_numeric needs w off the support");
  Cplx total{};
  if (!d.Q.is_zero()) {
    const ThetaWeight wt(d.Q, e);
    total = integrate_theta([&](double th) { return Cplx(wt(th)) / (e * std::sin(th) - w); }, config);
  }
  for (const auto& a : d.atoms) {
    if (a.location == w) throw Error(ErrorKind::PoleAt, "w coincides with an atom");
    total += a.weight / (a.location - w);
  }
  return total;
}

std::vector<double> moments(const DensitySpec& d, int count, const QuadratureConfig& config) {
  std::vector<double> m(static_cast<size_t>(count), 0.0);
  const double e = d.c.edge();
  for (int k = 0; k < count; ++k) {
    double v = 0.0;
    if (!d.Q.is_zero()) {
      const ThetaWeight wt(d.Q, e);
      v = integrate_theta([&](double th) { return Cplx(wt(th) * std::pow(e * std::sin(th), k)); }, config).real();
    }
    for (const auto& a : d.atoms) v += a.weight * std::pow(a.location, k);
    m[static_cast<size_t>(k)] = v;
  }
  return m;
}

double continuum_mass(const DensitySpec& d, const QuadratureConfig& config) {
  DensitySpec continuum = d;
  continuum.atoms.clear();
  return moments(continuum, 1, config)[0];
}

double total_mass(const DensitySpec& d, const QuadratureConfig& config) { return moments(d, 1, config)[0]; }

SeriesAtInfinity series_from_moments(const std::vector<double>& m) {
  std::vector<Cplx> tail;
  tail.reserve(m.size());
  for (double v : m) tail.emplace_back(-v, 0.0);
  const int order = static_cast<int>(m.size());
  return SeriesAtInfinity(Poly{}, std::move(tail), order);
}

std::vector<Cplx> sqrt_taylor(Cplx center, const SemicircleParam& c, int count) {
  std::vector<Cplx> s(static_cast<size_t>(std::max(count, 0)));
  if (count <= 0) return s;
  s[0] = sqrt_branch(center, c);
  // s(h)^2 = (center^2 - 4c) + 2 center h + h^2
  for (int k = 1; k < count; ++k) {
    Cplx p = k == 1 ? 2.0 * center : (k == 2 ? Cplx(1.0) : Cplx{});
    for (int i = 1; i < k; ++i) p -= s[static_cast<size_t>(i)] * s[static_cast<size_t>(k - i)];
    s[static_cast<size_t>(k)] = p / (2.0 * s[0]);
  }
  return s;
}

}  // namespace semiroots
