#pragma once

#include <utility>
#include <vector>

#include "semiroots/numeric.hpp"

namespace semiroots {

/// Variance parameter c > 0 of the semicircle on I_c = [-2 sqrt(c), 2 sqrt(c)].
class SemicircleParam {
 public:
  explicit SemicircleParam(double c);
  double value() const { return c_; }
  /// Half-width 2 sqrt(c) of the cut.
  double edge() const;

 private:
  double c_;
};

/// Branch of sqrt(w^2 - 4c) analytic off I_c and asymptotic to w at infinity.
/// Throws OnCut for real w with |w| <= 2 sqrt(c).
Cplx sqrt_branch(Cplx w, const SemicircleParam& c);

struct BoundaryValues {
  Cplx upper;
  Cplx lower;
};

/// Limits of sqrt_branch from above and below at an interior point of I_c.
BoundaryValues boundary_values(double x, const SemicircleParam& c);

/// Small root of z^2 + w z + c = 0, i.e. (-w + sqrt(w^2 - 4c)) / 2.
Cplx rho(Cplx w, const SemicircleParam& c);
/// Large root, (-w - sqrt(w^2 - 4c)) / 2.
Cplx rho_star(Cplx w, const SemicircleParam& c);

/// (F(w) + kappa sqrt(w^2 - 4c)) / G(w).
///
/// With kappa == 0 the function is rational and common roots of F and G are
/// cancelled on construction.
class AlgebraicStieltjes {
 public:
  AlgebraicStieltjes(Poly F, Cplx kappa, Poly G, SemicircleParam c);

  /// rho(w) / c, the semicircle transform.
  static AlgebraicStieltjes semicircle(double c);

  const Poly& F() const { return F_; }
  Cplx kappa() const { return kappa_; }
  const Poly& G() const { return G_; }
  const SemicircleParam& param() const { return c_; }
  double c() const { return c_.value(); }

  /// Throws PoleAt near zeros of G and OnCut on I_c.
  Cplx operator()(Cplx w) const;

 private:
  Poly F_;
  Cplx kappa_;
  Poly G_;
  SemicircleParam c_;
};

Cplx eval(const AlgebraicStieltjes& s, Cplx w);

/// Expansion of S at infinity to the given order.
SeriesAtInfinity series_of(const AlgebraicStieltjes& s, int order);

struct Atom {
  double location = 0.0;
  double weight = 0.0;
};

/// Measure sqrt(4c - t^2) / Q(t) dt on I_c plus point masses.
///
/// An empty Q means the measure has no continuous part. In signed mode the
/// positivity requirements on Q and on the weights are not enforced.
struct DensitySpec {
  SemicircleParam c{1.0};
  Poly Q;
  std::vector<Atom> atoms;
  bool signed_mode = false;

  /// Continuous density at t in I_c (zero outside).
  double density(double t) const;
  /// Throws NotPositive when Q fails to be positive on the interior of I_c or
  /// an atom sits inside it (only the first check is skipped in signed mode).
  void validate() const;
};

/// Continuum plus atoms recovered through the inversion formula.
///
/// Throws RootOnCut for poles of S inside I_c and HigherOrderRealPole for real
/// poles of order two or more.
DensitySpec decompose_measure(const AlgebraicStieltjes& s);

struct QuadratureConfig {
  double abs_tol = 1e-10;
  unsigned max_depth = 18;
};

/// Direct quadrature of  int sqrt(4c - t^2) / ((t - w) Q(t)) dt + sum p_j / (q_j - w).
Cplx stieltjes_numeric(const DensitySpec& d, Cplx w, const QuadratureConfig& config = {});

double continuum_mass(const DensitySpec& d, const QuadratureConfig& config = {});
double total_mass(const DensitySpec& d, const QuadratureConfig& config = {});

/// Moments m_0 .. m_count-1 of the measure, by quadrature.
std::vector<double> moments(const DensitySpec& d, int count, const QuadratureConfig& config = {});

/// -sum_k m_k w^-(k+1): the expansion of a transform with the given moments.
SeriesAtInfinity series_from_moments(const std::vector<double>& m);

/// Taylor coefficients of sqrt_branch(., c) at a point off I_c.
std::vector<Cplx> sqrt_taylor(Cplx center, const SemicircleParam& c, int count);

}  // namespace semiroots
