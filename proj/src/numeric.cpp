#include "semiroots/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace semiroots {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NoRoots: return "NoRoots";
    case ErrorKind::Convergence: return "Convergence";
    case ErrorKind::DivisionByZeroSeries: return "DivisionByZeroSeries";
    case ErrorKind::InsufficientOrder: return "InsufficientOrder";
    case ErrorKind::OnCut: return "OnCut";
    case ErrorKind::Endpoint: return "Endpoint";
    case ErrorKind::PoleAt: return "PoleAt";
    case ErrorKind::RootOnCut: return "RootOnCut";
    case ErrorKind::HigherOrderRealPole: return "HigherOrderRealPole";
    case ErrorKind::Quadrature: return "Quadrature";
    case ErrorKind::Degenerate: return "Degenerate";
    case ErrorKind::NotReal: return "NotReal";
    case ErrorKind::ZeroBeta: return "ZeroBeta";
    case ErrorKind::PoleNear: return "PoleNear";
    case ErrorKind::NotPositive: return "NotPositive";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::WrongFamily: return "WrongFamily";
    case ErrorKind::NotAShift: return "NotAShift";
    case ErrorKind::Infeasible: return "Infeasible";
    case ErrorKind::RootInsideCut: return "RootInsideCut";
    case ErrorKind::EndpointHigherOrder: return "EndpointHigherOrder";
    case ErrorKind::NotNormalizable: return "NotNormalizable";
    case ErrorKind::Inconsistent: return "Inconsistent";
    case ErrorKind::BadAtomSite: return "BadAtomSite";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

bool finite(Cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void require_finite(Cplx z, const char* where) {
  if (!finite(z)) throw Error(ErrorKind::InvalidArgument, std::string("non-finite value in ") + where);
}

}  // namespace

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(std::vector<Cplx> coeffs) : coeffs_(std::move(coeffs)) {
  for (const auto& z : coeffs_) require_finite(z, "polynomial coefficient");
  normalize();
}

void Poly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == Cplx{}) coeffs_.pop_back();
}

Poly Poly::constant(Cplx value) { return Poly({value}); }

Poly Poly::identity() { return Poly({0.0, 1.0}); }

Poly Poly::monomial(int power, Cplx coeff) {
  std::vector<Cplx> c(static_cast<size_t>(power) + 1);
  c.back() = coeff;
  return Poly(std::move(c));
}

Poly Poly::from_roots(std::span<const Cplx> roots, Cplx lead) {
  Poly p = constant(lead);
  for (const auto& r : roots) p = p * Poly({-r, 1.0});
  return p;
}

Cplx Poly::operator[](int k) const {
  if (k < 0 || k > degree()) return {};
  return coeffs_[static_cast<size_t>(k)];
}

Cplx Poly::operator()(Cplx w) const {
  Cplx acc{};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * w + *it;
  return acc;
}

Poly Poly::derivative() const {
  if (degree() < 1) return {};
  std::vector<Cplx> d(coeffs_.size() - 1);
  for (size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<double>(k);
  return Poly(std::move(d));
}

double Poly::max_abs() const {
  double m = 0.0;
  for (const auto& z : coeffs_) m = std::max(m, std::abs(z));
  return m;
}

double Poly::norm1() const {
  double s = 0.0;
  for (const auto& z : coeffs_) s += std::abs(z);
  return s;
}

Poly Poly::trimmed(double rel_tol) const {
  const double cut = rel_tol * max_abs();
  std::vector<Cplx> c = coeffs_;
  while (!c.empty() && std::abs(c.back()) <= cut) c.pop_back();
  return Poly(std::move(c));
}

bool Poly::is_real(double rel_tol) const {
  const double scale = std::max(1.0, max_abs());
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [&](Cplx z) { return std::abs(z.imag()) <= rel_tol * scale; });
}

Poly Poly::real_part() const {
  std::vector<Cplx> c;
  c.reserve(coeffs_.size());
  for (const auto& z : coeffs_) c.emplace_back(z.real(), 0.0);
  return Poly(std::move(c));
}

Poly Poly::conj() const {
  std::vector<Cplx> c;
  c.reserve(coeffs_.size());
  for (const auto& z : coeffs_) c.push_back(std::conj(z));
  return Poly(std::move(c));
}

Poly Poly::taylor_shift(Cplx center) const {
  // Repeated synthetic division.
  std::vector<Cplx> c = coeffs_;
  const int n = degree();
  for (int k = 0; k < n; ++k) {
    for (int j = n - 1; j >= k; --j) c[static_cast<size_t>(j)] += center * c[static_cast<size_t>(j) + 1];
  }
  return Poly(std::move(c));
}

std::pair<Poly, Cplx> Poly::deflate(Cplx root) const {
  if (degree() < 1) return {Poly{}, (*this)(root)};
  std::vector<Cplx> q(coeffs_.size() - 1);
  Cplx carry = coeffs_.back();
  for (int k = degree() - 1; k >= 0; --k) {
    q[static_cast<size_t>(k)] = carry;
    carry = coeffs_[static_cast<size_t>(k)] + carry * root;
  }
  return {Poly(std::move(q)), carry};
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
  if (divisor.is_zero()) throw Error(ErrorKind::InvalidArgument, "polynomial division by zero");
  const int dd = divisor.degree();
  if (degree() < dd) return {Poly{}, *this};
  std::vector<Cplx> rem = coeffs_;
  std::vector<Cplx> quo(static_cast<size_t>(degree() - dd) + 1);
  const Cplx lead = divisor.leading();
  for (int k = degree() - dd; k >= 0; --k) {
    const Cplx f = rem[static_cast<size_t>(k + dd)] / lead;
    quo[static_cast<size_t>(k)] = f;
    for (int j = 0; j <= dd; ++j) rem[static_cast<size_t>(k + j)] -= f * divisor.coeffs_[static_cast<size_t>(j)];
    rem[static_cast<size_t>(k + dd)] = 0.0;
  }
  rem.resize(static_cast<size_t>(dd));
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly& Poly::operator+=(const Poly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  normalize();
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  normalize();
  return *this;
}

Poly& Poly::operator*=(Cplx k) {
  require_finite(k, "polynomial scale");
  for (auto& z : coeffs_) z *= k;
  normalize();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Cplx> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    for (size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Poly(std::move(c));
}

// ---------------------------------------------------------------------------
// Roots

int RootSet::total_multiplicity() const {
  int n = 0;
  for (const auto& r : roots) n += r.multiplicity;
  return n;
}

std::vector<Cplx> RootSet::flattened() const {
  std::vector<Cplx> out;
  for (const auto& r : roots)
    for (int k = 0; k < r.multiplicity; ++k) out.push_back(r.location);
  return out;
}

namespace {

// p and p' at z for a monic-or-not coefficient vector (ascending).
std::pair<Cplx, Cplx> horner2(const std::vector<Cplx>& a, Cplx z) {
  Cplx p = a.back();
  Cplx dp{};
  for (size_t k = a.size() - 1; k-- > 0;) {
    dp = dp * z + p;
    p = p * z + a[k];
  }
  return {p, dp};
}

std::vector<Cplx> aberth(const std::vector<Cplx>& a, int max_iterations) {
  const int m = static_cast<int>(a.size()) - 1;
  if (m == 1) return {-a[0] / a[1]};

  const Cplx center = -a[static_cast<size_t>(m) - 1] / static_cast<double>(m);
  const auto [pc, dpc] = horner2(a, center);
  double radius = std::pow(std::abs(pc), 1.0 / m);
  if (!(radius > 0.0) || !std::isfinite(radius)) radius = 1.0;

  std::vector<Cplx> z(static_cast<size_t>(m));
  for (int k = 0; k < m; ++k) {
    const double theta = 2.0 * std::numbers::pi * k / m + 0.4;
    z[static_cast<size_t>(k)] = center + radius * Cplx(std::cos(theta), std::sin(theta));
  }

  for (int iter = 0; iter < max_iterations; ++iter) {
    double worst = 0.0;
    for (int i = 0; i < m; ++i) {
      Cplx& zi = z[static_cast<size_t>(i)];
      const auto [p, dp] = horner2(a, zi);
      if (p == Cplx{}) continue;
      Cplx step;
      if (dp == Cplx{}) {
        step = 1e-3 * (1.0 + std::abs(zi)) * Cplx(0.6, 0.8);
      } else {
        const Cplx ratio = p / dp;
        Cplx repulse{};
        for (int j = 0; j < m; ++j)
          if (j != i) repulse += 1.0 / (zi - z[static_cast<size_t>(j)]);
        step = ratio / (1.0 - ratio * repulse);
      }
      if (!finite(step)) step = 1e-3 * (1.0 + std::abs(zi)) * Cplx(0.6, 0.8);
      zi -= step;
      worst = std::max(worst, std::abs(step) / (1.0 + std::abs(zi)));
    }
    if (worst < 1e-15) break;
  }
  return z;
}

}  // namespace

RootSet poly_roots(const Poly& p, const RootFinderConfig& config) {
  if (p.degree() < 1) throw Error(ErrorKind::NoRoots, "polynomial of degree < 1 has no roots");
  const int n = p.degree();

  // Exact zero roots first; Aberth then runs on the reduced polynomial.
  int zeros = 0;
  while (p[zeros] == Cplx{}) ++zeros;
  std::vector<Cplx> a(p.coeffs().begin() + zeros, p.coeffs().end());
  const Cplx lead = a.back();
  for (auto& x : a) x /= lead;

  std::vector<Cplx> found(static_cast<size_t>(zeros), Cplx{});
  if (a.size() > 1) {
    const auto z = aberth(a, config.max_iterations);
    found.insert(found.end(), z.begin(), z.end());
  }

  const bool real_input = p.is_real(0.0);

  // Cluster nearby approximations (transitively) into multiple roots.
  std::vector<int> cluster(found.size(), -1);
  int clusters = 0;
  for (size_t i = 0; i < found.size(); ++i) {
    if (cluster[i] >= 0) continue;
    cluster[i] = clusters;
    std::vector<size_t> frontier{i};
    while (!frontier.empty()) {
      const size_t k = frontier.back();
      frontier.pop_back();
      for (size_t j = 0; j < found.size(); ++j) {
        if (cluster[j] >= 0) continue;
        const double tol = config.merge_rel * (1.0 + std::abs(found[k]));
        if (std::abs(found[j] - found[k]) < tol) {
          cluster[j] = clusters;
          frontier.push_back(j);
        }
      }
    }
    ++clusters;
  }

  RootSet out;
  for (int c = 0; c < clusters; ++c) {
    Cplx sum{};
    int count = 0;
    for (size_t j = 0; j < found.size(); ++j)
      if (cluster[j] == c) {
        sum += found[j];
        ++count;
      }
    Cplx r = sum / static_cast<double>(count);
    // A root of multiplicity m is a simple root of the (m-1)th derivative; polish there.
    Poly f = p;
    for (int k = 1; k < count; ++k) f = f.derivative();
    const Poly df = f.derivative();
    for (int it = 0; it < 3; ++it) {
      const Cplx d = df(r);
      if (d == Cplx{}) break;
      const Cplx next = r - f(r) / d;
      if (finite(next) && std::abs(f(next)) <= std::abs(f(r))) r = next;
    }
    // real coefficients: a conjugate pair this close would have been merged
    if (real_input && std::abs(r.imag()) < config.merge_rel * (1.0 + std::abs(r))) r = Cplx(r.real(), 0.0);
    out.roots.push_back({r, count});
  }

  const double scale = p.norm1();
  for (const auto& root : out.roots) {
    const double bound = config.residual_tol * scale * std::pow(std::max(1.0, std::abs(root.location)), n);
    if (!finite(root.location) || std::abs(p(root.location)) > bound)
      throw Error(ErrorKind::Convergence, "root iteration did not reach the residual tolerance");
  }
  std::sort(out.roots.begin(), out.roots.end(), [](const Root& x, const Root& y) {
    if (x.location.real() != y.location.real()) return x.location.real() < y.location.real();
    return x.location.imag() < y.location.imag();
  });
  return out;
}

// ---------------------------------------------------------------------------
// Series at infinity

namespace {

// Coefficients from power `top` down to power -order, index i <-> power top - i.
struct Dense {
  int top = 0;
  int order = 0;
  std::vector<Cplx> v;

  Cplx at(int power) const {
    if (power > top || power < -order) return {};
    return v[static_cast<size_t>(top - power)];
  }
};

Dense to_dense(const SeriesAtInfinity& s) {
  Dense d;
  d.order = s.order();
  d.top = std::max(s.poly_part().degree(), -1);
  if (s.poly_part().is_zero()) {
    d.top = -1;
    while (d.top >= -d.order && s.tail()[static_cast<size_t>(-d.top - 1)] == Cplx{}) --d.top;
  }
  if (d.top < -d.order) {
    d.top = -d.order - 1;  // identically zero to the known order
    return d;
  }
  for (int p = d.top; p >= -d.order; --p) d.v.push_back(s.coef(p));
  return d;
}

SeriesAtInfinity from_dense(const Dense& d) {
  if (d.order < 0)
    throw Error(ErrorKind::InsufficientOrder, "series arithmetic lost the polynomial part");
  std::vector<Cplx> poly;
  std::vector<Cplx> tail(static_cast<size_t>(d.order));
  for (int p = d.top; p >= -d.order; --p) {
    const Cplx c = d.at(p);
    if (p >= 0) {
      if (poly.size() < static_cast<size_t>(p) + 1) poly.resize(static_cast<size_t>(p) + 1);
      poly[static_cast<size_t>(p)] = c;
    } else {
      tail[static_cast<size_t>(-p - 1)] = c;
    }
  }
  return SeriesAtInfinity(Poly(std::move(poly)), std::move(tail), d.order);
}

}  // namespace

SeriesAtInfinity::SeriesAtInfinity(Poly poly_part, std::vector<Cplx> tail, int order)
    : poly_(std::move(poly_part)), tail_(std::move(tail)), order_(order) {
  if (order < 0) throw Error(ErrorKind::InsufficientOrder, "negative series order");
  tail_.resize(static_cast<size_t>(order));
  for (const auto& z : tail_) require_finite(z, "series coefficient");
}

SeriesAtInfinity SeriesAtInfinity::exact(const Poly& p, int order) {
  return SeriesAtInfinity(p, std::vector<Cplx>(static_cast<size_t>(order)), order);
}

Cplx SeriesAtInfinity::coef(int power) const {
  if (power >= 0) return poly_[power];
  if (-power > order_)
    throw Error(ErrorKind::InsufficientOrder,
                "coefficient of w^" + std::to_string(power) + " beyond order " + std::to_string(order_));
  return tail_[static_cast<size_t>(-power - 1)];
}

double SeriesAtInfinity::max_abs() const {
  double m = poly_.max_abs();
  for (const auto& z : tail_) m = std::max(m, std::abs(z));
  return m;
}

std::optional<int> SeriesAtInfinity::top_power(double rel_tol) const {
  const double cut = rel_tol * max_abs();
  for (int p = poly_.degree(); p >= 0; --p)
    if (std::abs(poly_[p]) > cut) return p;
  for (int k = 1; k <= order_; ++k)
    if (std::abs(tail_[static_cast<size_t>(k) - 1]) > cut) return -k;
  return std::nullopt;
}

SeriesAtInfinity SeriesAtInfinity::truncated(int order) const {
  if (order > order_) throw Error(ErrorKind::InsufficientOrder, "cannot extend a truncated series");
  return SeriesAtInfinity(poly_, std::vector<Cplx>(tail_.begin(), tail_.begin() + order), order);
}

SeriesAtInfinity SeriesAtInfinity::without_poly_part() const { return SeriesAtInfinity(Poly{}, tail_, order_); }

SeriesAtInfinity series_add(const SeriesAtInfinity& a, const SeriesAtInfinity& b) {
  const int order = std::min(a.order(), b.order());
  std::vector<Cplx> tail(static_cast<size_t>(order));
  for (int k = 1; k <= order; ++k) tail[static_cast<size_t>(k) - 1] = a.s(k) + b.s(k);
  return SeriesAtInfinity(a.poly_part() + b.poly_part(), std::move(tail), order);
}

SeriesAtInfinity series_scale(const SeriesAtInfinity& a, Cplx k) {
  std::vector<Cplx> tail = a.tail();
  for (auto& z : tail) z *= k;
  return SeriesAtInfinity(a.poly_part() * k, std::move(tail), a.order());
}

SeriesAtInfinity series_sub(const SeriesAtInfinity& a, const SeriesAtInfinity& b) {
  return series_add(a, series_scale(b, -1.0));
}

SeriesAtInfinity series_mul(const SeriesAtInfinity& a, const SeriesAtInfinity& b) {
  const Dense da = to_dense(a);
  const Dense db = to_dense(b);
  Dense out;
  out.order = std::min(da.order - db.top, db.order - da.top);
  out.top = da.top + db.top;
  if (out.top < -out.order) out.top = -out.order - 1;
  for (int p = out.top; p >= -out.order; --p) {
    Cplx acc{};
    for (int i = da.top; i >= -da.order; --i) {
      const int j = p - i;
      if (j < -db.order) continue;
      if (j > db.top) break;
      acc += da.at(i) * db.at(j);
    }
    out.v.push_back(acc);
  }
  return from_dense(out);
}

SeriesAtInfinity series_reciprocal(const SeriesAtInfinity& s, double lead_rel_tol) {
  const auto lead_power = s.top_power(lead_rel_tol);
  if (!lead_power) throw Error(ErrorKind::DivisionByZeroSeries, "series has no nonzero leading term");
  const int lead = *lead_power;
  const int order = s.order() + 2 * lead;
  if (order < 0) throw Error(ErrorKind::InsufficientOrder, "reciprocal would lose the polynomial part");

  // s = w^L * sum_{i>=0} u_i w^-i, with u_i known for i <= K + L.
  const int known = s.order() + lead;
  std::vector<Cplx> u(static_cast<size_t>(known) + 1);
  for (int i = 0; i <= known; ++i) u[static_cast<size_t>(i)] = s.coef(lead - i);
  std::vector<Cplx> r(u.size());
  r[0] = 1.0 / u[0];
  for (size_t i = 1; i < u.size(); ++i) {
    Cplx acc{};
    for (size_t j = 1; j <= i; ++j) acc += u[j] * r[i - j];
    r[i] = -acc / u[0];
  }
  Dense out;
  out.top = -lead;
  out.order = order;
  out.v = std::move(r);
  return from_dense(out);
}

SeriesAtInfinity sqrt_series(double c, int order) {
  // w * sum_j binom(1/2, j) (-4c)^j w^{-2j}
  std::vector<Cplx> tail(static_cast<size_t>(std::max(order, 0)));
  double coeff = 1.0;
  for (int j = 1;; ++j) {
    coeff *= (0.5 - (j - 1)) / j * (-4.0 * c);
    const int k = 2 * j - 1;
    if (k > order) break;
    tail[static_cast<size_t>(k) - 1] = coeff;
  }
  return SeriesAtInfinity(Poly::identity(), std::move(tail), order);
}

}  // namespace semiroots
