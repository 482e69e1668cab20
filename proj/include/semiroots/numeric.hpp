#pragma once

#include <complex>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "semiroots/error.hpp"

namespace semiroots {

using Cplx = std::complex<double>;

/// Dense polynomial with complex coefficients, stored in ascending degree.
///
/// Exact zero leading coefficients are always stripped, so `degree()` is
/// `coeffs().size() - 1` for a nonzero polynomial and -1 for the zero
/// polynomial. Near-zero leading coefficients produced by cancellation are
/// kept until the caller asks for `trimmed()`.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Cplx> coeffs);
  Poly(std::initializer_list<Cplx> coeffs) : Poly(std::vector<Cplx>(coeffs)) {}

  static Poly constant(Cplx value);
  /// The identity polynomial `w`.
  static Poly identity();
  static Poly monomial(int power, Cplx coeff = 1.0);
  /// lead * prod (w - r_k)
  static Poly from_roots(std::span<const Cplx> roots, Cplx lead = 1.0);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Cplx>& coeffs() const { return coeffs_; }
  /// Coefficient of w^k; zero beyond the degree.
  Cplx operator[](int k) const;
  Cplx leading() const { return coeffs_.empty() ? Cplx{} : coeffs_.back(); }

  Cplx operator()(Cplx w) const;
  Poly derivative() const;

  /// Largest coefficient modulus.
  double max_abs() const;
  double norm1() const;

  /// Drops leading coefficients whose modulus is at most rel_tol * max_abs().
  Poly trimmed(double rel_tol) const;

  bool is_real(double rel_tol) const;
  Poly real_part() const;
  Poly conj() const;

  /// Coefficients of P(center + h) as a polynomial in h.
  Poly taylor_shift(Cplx center) const;

  /// Synthetic division by (w - root): quotient and remainder value P(root).
  std::pair<Poly, Cplx> deflate(Cplx root) const;
  /// Euclidean division; throws on a zero divisor.
  std::pair<Poly, Poly> divmod(const Poly& divisor) const;

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(Cplx k);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) { return a *= -1.0; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, Cplx k) { return a *= k; }
  friend Poly operator*(Cplx k, Poly a) { return a *= k; }

 private:
  void normalize();
  std::vector<Cplx> coeffs_;
};

Poly operator*(const Poly& a, const Poly& b);

struct Root {
  Cplx location;
  int multiplicity = 1;
};

struct RootSet {
  std::vector<Root> roots;

  int total_multiplicity() const;
  /// Locations repeated according to multiplicity.
  std::vector<Cplx> flattened() const;
};

struct RootFinderConfig {
  int max_iterations = 200;
  double residual_tol = 1e-10;
  /// Roots closer than merge_rel * (1 + |r|) are merged into one cluster.
  double merge_rel = 1e-7;
};

/// Roots of a nonzero polynomial of degree >= 1 by Aberth-Ehrlich
/// simultaneous iteration on the monic normalization.
RootSet poly_roots(const Poly& p, const RootFinderConfig& config = {});

/// Truncated expansion at infinity
///   p(w) + s_1 w^-1 + ... + s_K w^-K + O(w^-(K+1)),
/// where K is `order()`. Arithmetic tracks K exactly and never reports
/// coefficients beyond what the operands determine.
class SeriesAtInfinity {
 public:
  SeriesAtInfinity() = default;
  SeriesAtInfinity(Poly poly_part, std::vector<Cplx> tail, int order);

  /// A polynomial viewed as a series known to `order`.
  static SeriesAtInfinity exact(const Poly& p, int order);

  const Poly& poly_part() const { return poly_; }
  const std::vector<Cplx>& tail() const { return tail_; }
  int order() const { return order_; }

  /// Coefficient of w^power; throws InsufficientOrder below -order().
  Cplx coef(int power) const;
  /// s_k, 1 <= k <= order().
  Cplx s(int k) const { return coef(-k); }

  /// Highest power carrying a coefficient larger than rel_tol * max |coef|;
  /// nullopt when every known coefficient is (relatively) zero.
  std::optional<int> top_power(double rel_tol = 0.0) const;
  double max_abs() const;

  SeriesAtInfinity truncated(int order) const;
  /// Same series with the polynomial part replaced by zero.
  SeriesAtInfinity without_poly_part() const;

 private:
  Poly poly_;
  std::vector<Cplx> tail_;
  int order_ = 0;
};

SeriesAtInfinity series_add(const SeriesAtInfinity& a, const SeriesAtInfinity& b);
SeriesAtInfinity series_sub(const SeriesAtInfinity& a, const SeriesAtInfinity& b);
SeriesAtInfinity series_scale(const SeriesAtInfinity& a, Cplx k);
SeriesAtInfinity series_mul(const SeriesAtInfinity& a, const SeriesAtInfinity& b);

/// 1/S. Leading coefficients below `lead_rel_tol` (relative to the largest
/// coefficient) are treated as cancelled. The result order is K + 2L where L
/// is the leading power of S.
SeriesAtInfinity series_reciprocal(const SeriesAtInfinity& s, double lead_rel_tol = 1e-13);

/// Expansion of the branch of sqrt(w^2 - 4c) that behaves like w at infinity.
SeriesAtInfinity sqrt_series(double c, int order);

}  // namespace semiroots
