#include "semiroots/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "semiroots/stieltjes.hpp"

namespace semiroots {

bool JacobiParams::positive() const {
  if (tail.semicircular_kind() && !(tail.c > 0.0)) return false;
  return std::all_of(bsq.begin(), bsq.end(), [](double b) { return b > 0.0; });
}

ComplexJacobi extract_jacobi_complex(const SeriesAtInfinity& s, int depth) {
  if (depth < 0) throw Error(ErrorKind::InvalidArgument, "negative depth");
  if (s.order() < 2 * depth + 2)
    throw Error(ErrorKind::InsufficientOrder, "order " + std::to_string(s.order()) + " < 2 depth + 2");
  if (std::abs(s.s(1) + 1.0) > 1e-10)
    throw Error(ErrorKind::InvalidArgument, "series is not normalized (s_1 != -1)");

  ComplexJacobi out;
  SeriesAtInfinity level = s.without_poly_part();
  for (int n = 0; n < depth; ++n) {
    const SeriesAtInfinity r = series_reciprocal(level);
    // 1/S_n = -w + a_n + O(1/w)
    const Poly& head = r.poly_part();
    if (head.degree() > 1 || std::abs(head[1] + 1.0) > 1e-8)
      throw Error(ErrorKind::Inconsistent, "1/S_n does not start with -w at level " + std::to_string(n));
    const Cplx a = head[0];
    out.a.push_back(a);

    // T = 1/S_n + w - a_n = -b_n^2 S_{n+1}
    const SeriesAtInfinity t = r.without_poly_part();
    const Cplx t1 = t.s(1);
    if (std::abs(t1) <= 1e-12 * std::max(1.0, t.max_abs()))
      throw Error(ErrorKind::ZeroBeta, "continued fraction terminates at level " + std::to_string(n));
    out.bsq.push_back(t1);
    level = series_scale(t, -1.0 / t1);
  }
  return out;
}

JacobiParams extract_jacobi(const SeriesAtInfinity& s, int depth) {
  const ComplexJacobi cj = extract_jacobi_complex(s, depth);
  JacobiParams out;
  auto real_or_throw = [](Cplx z, const char* name, size_t n) {
    if (std::abs(z.imag()) > 1e-9 * std::max(1.0, std::abs(z.real())))
      throw Error(ErrorKind::NotReal, std::string(name) + "_" + std::to_string(n) + " has imaginary part " +
                                          std::to_string(z.imag()));
    return z.real();
  };
  for (size_t n = 0; n < cj.a.size(); ++n) {
    out.a.push_back(real_or_throw(cj.a[n], "a", n));
    out.bsq.push_back(real_or_throw(cj.bsq[n], "bsq", n));
  }
  return out;
}

namespace {

ComplexJacobi widen(const JacobiParams& j) {
  ComplexJacobi out;
  out.a.assign(j.a.begin(), j.a.end());
  out.bsq.assign(j.bsq.begin(), j.bsq.end());
  out.tail = j.tail;
  return out;
}

Cplx checked_inverse(Cplx d, Cplx w) {
  if (std::abs(d) <= 1e-14 * (1.0 + std::abs(w))) throw Error(ErrorKind::PoleNear, "vanishing denominator in continued fraction");
  return 1.0 / d;
}

}  // namespace

Cplx eval_cfrac(const ComplexJacobi& j, Cplx w) {
  const size_t depth = j.a.size();
  Cplx inner;
  bool have_inner = false;
  if (j.tail.semicircular_kind()) {
    const SemicircleParam p(j.tail.c);
    inner = rho(w - j.tail.center, p) / j.tail.c;
    have_inner = true;
  } else if (depth == 0) {
    throw Error(ErrorKind::InvalidArgument, "empty continued fraction without a tail");
  }
  if (have_inner && j.bsq.size() < depth)
    throw Error(ErrorKind::InvalidArgument, "tail needs b_n^2 for every explicit level");
  if (!have_inner && j.bsq.size() + 1 < depth) throw Error(ErrorKind::InvalidArgument, "too few b_n^2 entries");

  for (size_t k = depth; k-- > 0;) {
    Cplx d = j.a[k] - w;
    if (have_inner) d -= j.bsq[k] * inner;
    inner = checked_inverse(d, w);
    have_inner = true;
  }
  return inner;
}

Cplx eval_cfrac(const JacobiParams& j, Cplx w) { return eval_cfrac(widen(j), w); }

SeriesAtInfinity series_of_cfrac(const JacobiParams& j, int order) {
  // A semicircular tail agrees with its own truncation to depth D up to w^-(2D+1).
  std::vector<double> a = j.a;
  std::vector<double> bsq = j.bsq;
  if (j.tail.semicircular_kind()) {
    const size_t want = a.size() + static_cast<size_t>(order / 2 + 2);
    bsq.resize(a.size());
    while (a.size() < want) {
      a.push_back(j.tail.center);
      bsq.push_back(j.tail.c);
    }
  }
  if (a.empty()) throw Error(ErrorKind::InvalidArgument, "empty continued fraction without a tail");

  SeriesAtInfinity inner;
  bool have_inner = false;
  for (size_t k = a.size(); k-- > 0;) {
    SeriesAtInfinity d = SeriesAtInfinity::exact(Poly({a[k], -1.0}), order);
    if (have_inner) d = series_sub(d, series_scale(inner, bsq[k]));
    inner = series_reciprocal(d);
    have_inner = true;
  }
  return inner.truncated(order);
}

TriJacobi jacobi_matrix(const JacobiParams& j, int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "matrix size must be positive");
  const bool tail = j.tail.semicircular_kind();
  if (!tail && (static_cast<int>(j.a.size()) < n || static_cast<int>(j.bsq.size()) < n - 1))
    throw Error(ErrorKind::OutOfRange, "not enough Jacobi data for an " + std::to_string(n) + "x" + std::to_string(n) + " block");

  TriJacobi t;
  t.n = n;
  for (int k = 0; k < n; ++k) t.diag.push_back(k < j.depth() ? j.a[static_cast<size_t>(k)] : j.tail.center);
  for (int k = 0; k + 1 < n; ++k) {
    const double b2 = k < static_cast<int>(j.bsq.size()) ? j.bsq[static_cast<size_t>(k)] : j.tail.c;
    if (!(b2 > 0.0)) throw Error(ErrorKind::NotPositive, "b_" + std::to_string(k) + "^2 is not positive");
    t.offdiag.push_back(std::sqrt(b2));
  }
  return t;
}

Cplx resolvent00(const TriJacobi& t, Cplx w) {
  const auto n = static_cast<size_t>(t.n);
  if (n == 0 || t.diag.size() != n || t.offdiag.size() + 1 != n)
    throw Error(ErrorKind::InvalidArgument, "malformed tridiagonal matrix");

  // Forward elimination of (T - w) x = e_0, then back substitution.
  std::vector<Cplx> upper(n);
  std::vector<Cplx> rhs(n);
  const double scale = 1.0 + std::abs(w);
  Cplx pivot = t.diag[0] - w;
  for (size_t k = 0; k < n; ++k) {
    if (k > 0) pivot = t.diag[k] - w - t.offdiag[k - 1] * upper[k - 1];
    if (std::abs(pivot) <= 1e-15 * scale) throw Error(ErrorKind::Singular, "zero pivot in tridiagonal solve");
    upper[k] = k + 1 < n ? t.offdiag[k] / pivot : Cplx{};
    const Cplx r = k == 0 ? Cplx(1.0) : -t.offdiag[k - 1] * rhs[k - 1];
    rhs[k] = r / pivot;
  }
  Cplx x = rhs[n - 1];
  for (size_t k = n - 1; k-- > 0;) x = rhs[k] - upper[k] * x;
  return x;
}

JacobiParams affine_transform(const JacobiParams& j, double a, double b) {
  if (b == 0.0) throw Error(ErrorKind::Degenerate, "affine map with b = 0");
  JacobiParams out = j;
  for (auto& x : out.a) x = b * x + a;
  for (auto& x : out.bsq) x *= b * b;
  if (out.tail.semicircular_kind()) {
    out.tail.c *= b * b;
    out.tail.center = b * out.tail.center + a;
  }
  return out;
}

JacobiParams params_of(const TriJacobi& t) {
  JacobiParams out;
  out.a = t.diag;
  for (double b : t.offdiag) out.bsq.push_back(b * b);
  return out;
}

}  // namespace semiroots
