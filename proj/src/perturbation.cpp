#include "semiroots/perturbation.hpp"

#include <cmath>
#include <string>

namespace semiroots {

TriJacobi phi_k(const TriJacobi& t, const PerturbStep& step) {
  if (step.k < 0 || step.k >= t.n)
    throw Error(ErrorKind::OutOfRange, "level " + std::to_string(step.k) + " outside a " + std::to_string(t.n) + "x" +
                                           std::to_string(t.n) + " matrix");
  TriJacobi out = t;
  const auto k = static_cast<size_t>(step.k);
  out.diag[k] = (1.0 - 2.0 * step.q) * t.diag[k] - step.p;
  if (k >= 1) out.offdiag[k - 1] = (1.0 - step.q) * t.offdiag[k - 1];
  if (k + 1 < static_cast<size_t>(t.n)) out.offdiag[k] = (1.0 - step.q) * t.offdiag[k];
  return out;
}

TriJacobi apply_steps(TriJacobi t, const std::vector<PerturbStep>& steps) {
  for (const auto& s : steps) t = phi_k(t, s);
  return t;
}

TriJacobi semicircle_matrix(double c, int n) {
  JacobiParams j;
  j.tail = Tail::semicircular(c);
  return jacobi_matrix(j, n);
}

PerturbStep one_shift_perturbation(double c, double alpha, double beta) {
  if (!(c > 0.0)) throw Error(ErrorKind::InvalidArgument, "c must be > 0");
  if (!(beta > 0.0)) throw Error(ErrorKind::NotPositive, "beta must be > 0");
  return {0, -alpha, 1.0 - std::sqrt(2.0 * beta)};
}

std::pair<PerturbStep, PerturbStep> two_shift_perturbation(double c, double alpha, double beta, double gamma,
                                                           double delta) {
  if (!(c > 0.0)) throw Error(ErrorKind::InvalidArgument, "c must be > 0");
  if (!(beta > 0.0)) throw Error(ErrorKind::NotPositive, "beta must be > 0");
  if (!(delta > 0.0)) throw Error(ErrorKind::NotPositive, "delta must be > 0");
  return {{0, -gamma, 1.0 - std::sqrt(delta / (2.0 * beta * c))}, {1, -alpha, 1.0 - std::sqrt(2.0 * beta)}};
}

std::vector<PerturbStep> n_shift_perturbation(double c, const JacobiParams& data) {
  if (!(c > 0.0)) throw Error(ErrorKind::InvalidArgument, "c must be > 0");
  const size_t n = data.a.size();
  if (data.bsq.size() < n) throw Error(ErrorKind::InvalidArgument, "need b_k^2 for every level");
  // b_{n-1}^2 = (1 - q_{n-1})^2 c,  b_k^2 = (1 - q_k)^2 (1 - q_{k+1})^2 c
  std::vector<double> scale(n);
  for (size_t k = n; k-- > 0;) {
    const double b2 = data.bsq[k];
    if (!(b2 > 0.0)) throw Error(ErrorKind::NotPositive, "b_" + std::to_string(k) + "^2 must be > 0");
    const double s = std::sqrt(b2 / c);
    scale[k] = k + 1 == n ? s : s / scale[k + 1];
  }
  std::vector<PerturbStep> steps;
  for (size_t k = 0; k < n; ++k) steps.push_back({static_cast<int>(k), -data.a[k], 1.0 - scale[k]});
  return steps;
}

std::vector<PerturbStep> n_shift_perturbation(double c, const ShiftStep& inner, const std::vector<ShiftStep>& outer) {
  const ComplexJacobi cj = chain_jacobi_data(inner, outer, c);
  JacobiParams data;
  for (size_t k = 0; k < cj.a.size(); ++k) {
    if (cj.a[k].imag() != 0.0 || cj.bsq[k].imag() != 0.0)
      throw Error(ErrorKind::NotReal, "perturbations need real shift parameters");
    data.a.push_back(cj.a[k].real());
    data.bsq.push_back(cj.bsq[k].real());
  }
  return n_shift_perturbation(c, data);
}

LiteralStep paper_literal_one(double c, double alpha, double beta) {
  (void)c;
  return {0, -alpha, 1.0 - std::sqrt(Cplx(-2.0 * beta))};
}

std::pair<LiteralStep, LiteralStep> paper_literal_two(double c, double alpha, double beta, double gamma, double delta) {
  return {{0, -gamma, 1.0 - std::sqrt(Cplx(delta / (2.0 * beta * c)))}, {1, alpha, 1.0 - std::sqrt(Cplx(-2.0 * beta))}};
}

}  // namespace semiroots
