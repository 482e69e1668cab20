#pragma once

#include <utility>
#include <vector>

#include "semiroots/jacobi.hpp"
#include "semiroots/shift.hpp"

namespace semiroots {

/// J -> J - p e_k e_k^T - q (J e_k) e_k^T - q e_k (J e_k)^T
struct PerturbStep {
  int k = 0;
  double p = 0.0;
  double q = 0.0;
};

TriJacobi phi_k(const TriJacobi& t, const PerturbStep& step);
/// Steps applied in the order given.
TriJacobi apply_steps(TriJacobi t, const std::vector<PerturbStep>& steps);

/// N x N block of the Jacobi matrix of the semicircle law of variance c.
TriJacobi semicircle_matrix(double c, int n);

/// (p, q) = (-alpha, 1 - sqrt(2 beta)).
PerturbStep one_shift_perturbation(double c, double alpha, double beta);
/// Level 0: (-gamma, 1 - sqrt(delta / (2 beta c))); level 1: (-alpha, 1 - sqrt(2 beta)).
std::pair<PerturbStep, PerturbStep> two_shift_perturbation(double c, double alpha, double beta, double gamma,
                                                           double delta);
/// Levels 0..n-1 for a chain whose Jacobi data is `data` (semicircular tail c
/// centred at 0), to be applied in ascending order.
std::vector<PerturbStep> n_shift_perturbation(double c, const JacobiParams& data);
std::vector<PerturbStep> n_shift_perturbation(double c, const ShiftStep& inner, const std::vector<ShiftStep>& outer);

/// The parameters exactly as printed, with sqrt(-2 beta) and p_1 = alpha;
/// complex in general. Kept for comparison only.
struct LiteralStep {
  int k = 0;
  Cplx p;
  Cplx q;
};
LiteralStep paper_literal_one(double c, double alpha, double beta);
std::pair<LiteralStep, LiteralStep> paper_literal_two(double c, double alpha, double beta, double gamma, double delta);

}  // namespace semiroots
