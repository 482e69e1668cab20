#pragma once

#include <vector>

#include "semiroots/jacobi.hpp"
#include "semiroots/stieltjes.hpp"

namespace semiroots {

/// S -> 1 / (alpha - w - beta S).
struct ShiftStep {
  Cplx alpha;
  Cplx beta;
};

/// 2 x 2 matrix of polynomials acting by linear fractional maps,
/// M.S = (A S + B) / (C S + D).
struct MobiusMat {
  Poly A, B, C, D;
  Cplx det = 1.0;

  static MobiusMat identity();
  Cplx apply(Cplx s, Cplx w) const;
  /// AD - BC as a polynomial (constant for products of shift matrices).
  Poly determinant() const;
};

/// 2 rho = -w + sqrt(w^2 - 4c), the base of every shift chain.
AlgebraicStieltjes two_rho(double c);

/// One shift, rationalized back to (F' + kappa' sqrt)/G'. Throws Degenerate if
/// the result has an identically zero denominator or is not of that form.
AlgebraicStieltjes shift_once(const AlgebraicStieltjes& s, const ShiftStep& step);

/// Direct evaluation of the shift at a point: 1 / (alpha - w - beta S(w)).
Cplx shift_value(Cplx s_value, const ShiftStep& step, Cplx w);

/// M_n = T_n ... T_1 with T_k = (0 1; -beta_k alpha_k - w). Steps are listed
/// in the order they are applied, so the last one is outermost.
MobiusMat mobius_chain(const std::vector<ShiftStep>& steps);

/// M.S_{alpha,beta}, where S_{alpha,beta} is the shift of 2 rho by `inner`.
AlgebraicStieltjes assemble_FG(const MobiusMat& m, const ShiftStep& inner, double c);

/// Convenience: shift 2 rho by inner, then by each of outer in turn.
AlgebraicStieltjes shift_chain(const ShiftStep& inner, const std::vector<ShiftStep>& outer, double c);

/// Expanded F, G of the shift of S_{alpha,beta} by (gamma, delta).
AlgebraicStieltjes two_shift_closed(Cplx alpha, Cplx beta, Cplx gamma, Cplx delta, double c);

/// Continued fraction data of the chain, outermost level first:
/// (alpha_n, beta_n), ..., (alpha_1, beta_1), (alpha, 2 beta c), tail c.
ComplexJacobi chain_jacobi_data(const ShiftStep& inner, const std::vector<ShiftStep>& outer, double c);

}  // namespace semiroots
