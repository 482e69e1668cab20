#pragma once

#include <vector>

#include "semiroots/inversion.hpp"
#include "semiroots/stieltjes.hpp"

namespace semiroots {

/// Coefficient of 1/z in sqrt(z^2 - 4c) / ((z - w) Q(z)) at infinity, as a
/// polynomial in w.
Poly residue_polynomial(const Poly& Q, double c);

struct PoleTerm {
  Cplx zeta;
  int multiplicity = 1;
  /// Degree multiplicity - 1.
  Poly q;
};

/// One term per root of Q off I_c. Simple zeros at the endpoints contribute
/// nothing and are skipped.
std::vector<PoleTerm> pole_terms(const Poly& Q, double c);

/// Transform of sqrt(4c - t^2) / Q(t) dt assembled from residues:
///   pi sqrt(w^2 - 4c) / Q + pi sum q_j / (zeta_j - w)^m_j - pi R_Q.
class ResidueTransform {
 public:
  ResidueTransform(Poly Q, double c);

  const Poly& Q() const { return Q_; }
  const SemicircleParam& param() const { return c_; }
  const std::vector<PoleTerm>& poles() const { return poles_; }
  const Poly& residue_poly() const { return RQ_; }

  Cplx operator()(Cplx w) const;
  /// The same function written as (pi P + pi sqrt(w^2 - 4c)) / Q.
  AlgebraicStieltjes to_algebraic() const;

 private:
  Poly Q_;
  SemicircleParam c_;
  std::vector<PoleTerm> poles_;
  Poly RQ_;
};

ResidueTransform stieltjes_from_density(const Poly& Q, double c);

/// Factor N with N * shape giving a density of total mass one. Closed forms
/// for degree 1 and 2, the -s_1 coefficient otherwise.
double normalize_density(const Poly& shape, double c);
/// The closed forms on their own: N = pi (-a + sqrt(a^2 - 4c)) for shape w - a and
/// N = pi (sigma_mu - 1) for shape (w - a)(w - b).
double normalize_linear(double a, double c);
double normalize_quadratic(Cplx a, Cplx b, double c);
/// Same quantity through the series at infinity, for any degree.
double normalize_series(const Poly& shape, double c);

struct SigmaTau {
  Cplx sigma;
  Cplx tau;
};
SigmaTau sigma_tau_mu(Cplx a, Cplx b, double c);

/// (1/2 pi i) times the integral over |z| = R by the periodic trapezoid rule.
Cplx contour_residue(const Poly& Q, double c, Cplx w, double radius_multiplier = 10.0, int nodes = 2048);

struct MeasureMatch {
  OneShiftSolutionSet set;
  PositivityReport report;
  int matched = -1;
  SigmaTau mu;
  double max_abs_diff = 0.0;
  /// Indices of positive solutions other than the match.
  std::vector<int> others;
  std::vector<bool> others_have_atoms;
  /// Whether the positive solution with sigma = -sigma_mu reproduces S_mu.
  bool negated_sigma_matches = false;
};

/// Finds the unique positive one-shift solution equal to the normalized
/// transform of sqrt(4c - t^2) / ((t - a)(t - b)).
MeasureMatch one_shift_measure_match(Cplx a, Cplx b, double c);

struct AtomExtension {
  DensitySpec spec;
  AlgebraicStieltjes transform;
  double continuum_scale = 1.0;
};

/// Adds point masses at real simple roots of Q. In probability mode the
/// continuum is rescaled so that the total mass is one.
AtomExtension atom_extension(const Poly& Q, double c, const std::vector<Atom>& atoms, bool signed_mode = false);

}  // namespace semiroots
