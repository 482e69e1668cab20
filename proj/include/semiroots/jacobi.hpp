#pragma once

#include <vector>

#include "semiroots/numeric.hpp"

namespace semiroots {

/// Closure below the explicit levels: either nothing, or a semicircle law of
/// variance c centred at `center` (constant Jacobi data a = center, b^2 = c).
struct Tail {
  enum class Kind { Truncated, Semicircular };
  Kind kind = Kind::Truncated;
  double c = 0.0;
  double center = 0.0;

  static Tail truncated() { return {}; }
  static Tail semicircular(double c, double center = 0.0) { return {Kind::Semicircular, c, center}; }
  bool semicircular_kind() const { return kind == Kind::Semicircular; }
};

struct JacobiParams {
  std::vector<double> a;
  std::vector<double> bsq;
  Tail tail;

  bool positive() const;
  int depth() const { return static_cast<int>(a.size()); }
};

/// Jacobi data allowed to be complex, as met in the middle of the root algebra.
struct ComplexJacobi {
  std::vector<Cplx> a;
  std::vector<Cplx> bsq;
  Tail tail;
};

struct TriJacobi {
  int n = 0;
  std::vector<double> diag;
  std::vector<double> offdiag;
};

/// Reads a_0.., b_0^2.. off the expansion of a normalized transform
/// (s_1 = -1). Needs order >= 2 depth + 2.
ComplexJacobi extract_jacobi_complex(const SeriesAtInfinity& s, int depth);
/// As above, rejecting parameters whose imaginary part exceeds 1e-9 (NotReal).
JacobiParams extract_jacobi(const SeriesAtInfinity& s, int depth);

Cplx eval_cfrac(const JacobiParams& j, Cplx w);
Cplx eval_cfrac(const ComplexJacobi& j, Cplx w);

/// Expansion at infinity of the continued fraction, to `order`.
SeriesAtInfinity series_of_cfrac(const JacobiParams& j, int order);

/// Leading n x n block of the Jacobi matrix; tail entries fill the rest.
TriJacobi jacobi_matrix(const JacobiParams& j, int n);

/// (e_0, (T - w)^-1 e_0) by an LU sweep of the tridiagonal system.
Cplx resolvent00(const TriJacobi& t, Cplx w);

/// Data of the image measure under t -> b t + a.
JacobiParams affine_transform(const JacobiParams& j, double a, double b);

/// Jacobi data read back from a matrix (b_n^2 = offdiag^2), truncated tail.
JacobiParams params_of(const TriJacobi& t);

}  // namespace semiroots
