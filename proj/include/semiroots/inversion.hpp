#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "semiroots/numeric.hpp"

namespace semiroots {

struct OneShiftSolution {
  Cplx alpha;
  Cplx beta;
  /// (1 - beta) / beta; NaN when the solution came from a limit formula with beta = 0.
  Cplx sigma;
  std::string label;
  Poly F0;
  Poly G0;
  /// Leading coefficient 1 - 2 beta of G0.
  Cplx multiplier;
  bool valid = true;
  /// Set on the second and later copies of a repeated solution.
  bool coincident = false;
  std::string reason;
  /// max |monic G0 - (w - a)(w - b)| relative to the coefficient size.
  double residual = 0.0;
};

struct OneShiftSolutionSet {
  Cplx a;
  Cplx b;
  double c = 1.0;
  /// "generic", "symmetric" (a + b = 0) or "double" (a = b).
  std::string case_label;
  std::vector<OneShiftSolution> solutions;
  bool degenerate = false;

  int distinct_count() const;
};

/// All (alpha, beta) whose G0 is proportional to (w - a)(w - b).
OneShiftSolutionSet one_shift_from_roots(Cplx a, Cplx b, double c);

/// beta = 1/2 case: both alpha with alpha + c / alpha = root.
std::pair<Cplx, Cplx> one_shift_deg1(Cplx root, double c);

/// sqrt(z^2 - 4c) on the analytic branch off the cut, principal root on it.
Cplx disc_root(Cplx z, double c);

enum class TwoShiftFamily {
  Deg4Symmetric,      // alpha = gamma = 0, beta free
  Deg4AlphaFree,      // Delta = -4c(1 - beta), beta fixed by zeta, alpha free
  Deg4BetaFree,       // Delta = -4c(1 - beta), beta free
  Deg3GammaZero,      // gamma = 0
  Deg3CriticalZeta,   // zeta^2 = 4c, alpha free
  Deg3ZeroZeta,       // zeta = 0, gamma free
  Deg3GammaLambda,    // gamma = lambda
  Deg3GammaZetaLambda // gamma = zeta^2 / lambda
};

std::string_view to_string(TwoShiftFamily f);
std::optional<TwoShiftFamily> two_shift_family_from_string(std::string_view name);
bool is_degree3(TwoShiftFamily f);

struct TwoShiftSolution {
  Cplx alpha;
  Cplx beta;
  Cplx gamma;
  Cplx delta;
  Cplx Delta;
  TwoShiftFamily family = TwoShiftFamily::Deg4Symmetric;
  std::string label;
  std::optional<std::pair<std::string, Cplx>> free_param;
  Cplx zeta;
  double c = 1.0;
  /// Degree-3 lambda families: c = zeta^2 r (1 - r).
  Cplx r;
};

/// G even of degree 4 through w^2 - zeta^2. `free_value` is beta for the
/// symmetric and beta-free families and alpha for the alpha-free family.
std::vector<TwoShiftSolution> two_shift_even_quartic(Cplx zeta, double c, TwoShiftFamily family, Cplx free_value);

/// G cubic (beta = 1/2) through w^2 - zeta^2. `free_value` is alpha for the
/// critical family, gamma for zeta = 0, lambda for the lambda families and
/// unused for gamma = 0.
std::vector<TwoShiftSolution> two_shift_deg3(Cplx zeta, double c, TwoShiftFamily family, Cplx free_value = 0.0);

/// The two values (1 +- sqrt(1 - 4c/zeta^2)) / 2.
std::pair<Cplx, Cplx> r_values(Cplx zeta, double c);

struct LambdaCandidate {
  Cplx lambda;
  /// False when delta vanishes, so the parameters do not define a second shift.
  bool is_shift = true;
  /// The quadratic for lambda has a double root.
  bool double_root = false;
};

/// lambda such that the lambda family with this r has `root` as the third root of G.
std::vector<LambdaCandidate> remaining_root_to_lambda(Cplx root, Cplx zeta, double c, Cplx r, TwoShiftFamily family);

/// Third root of the cubic G of a degree-3 solution.
Cplx remaining_root(const TwoShiftSolution& s);

struct PositivityEntry {
  bool is_real = false;
  bool is_positive = false;
  /// Verdict of the closed-form range conditions, when one applies.
  std::optional<bool> predicted;
  std::vector<std::string> reasons;
};

struct PositivityReport {
  std::vector<PositivityEntry> per_solution;
  int positive = 0;
  int real = 0;
  int total = 0;
  /// Count forced by the counting corollary, when its hypotheses hold.
  std::optional<int> expected_positive;

  bool consistent() const;
};

PositivityReport classify_positivity(const OneShiftSolutionSet& set);
PositivityReport classify_positivity(const std::vector<TwoShiftSolution>& sols);

}  // namespace semiroots
