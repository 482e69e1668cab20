#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "semiroots/jacobi.hpp"
#include "semiroots/stieltjes.hpp"

namespace semiroots {

/// Transform of the two-level (r, lambda) family, evaluated from its closed form.
Cplx haagerup_transform(double r, double lambda, Cplx w);
AlgebraicStieltjes haagerup_algebraic(double r, double lambda);
/// (1/lambda, r(1 - lambda^-2); -r/lambda, r(1 - r); tail r(1 - r)).
JacobiParams haagerup_params(double r, double lambda);

struct CorpusDensity {
  std::string name;
  Poly Q;
  double c = 1.0;
};

/// Seven densities sqrt(4c - t^2) / Q(t) covering every pole configuration the
/// residue transform handles.
std::vector<CorpusDensity> density_corpus();

/// Off-axis evaluation points in both half planes.
std::vector<Cplx> off_axis_points(int n, std::uint64_t seed, double spread = 4.0);

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyOptions {
  std::uint64_t seed = 20240611;
};

CriterionResult check_branch(const VerifyOptions& opt);
CriterionResult check_quotient_example(const VerifyOptions& opt);
CriterionResult check_haagerup(const VerifyOptions& opt);
CriterionResult check_one_shift(const VerifyOptions& opt);
CriterionResult check_two_shift(const VerifyOptions& opt);
CriterionResult check_residue(const VerifyOptions& opt);
CriterionResult check_normalization(const VerifyOptions& opt);
CriterionResult check_perturbation(const VerifyOptions& opt);
CriterionResult check_moments(const VerifyOptions& opt);

/// All nine checks in order. Exceptions inside a check turn into a failure.
std::vector<CriterionResult> run_all_checks(const VerifyOptions& opt = {});
CriterionResult run_check(int id, const VerifyOptions& opt = {});

}  // namespace semiroots
