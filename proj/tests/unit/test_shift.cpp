#include "support.hpp"

#include <random>

#include "semiroots/jacobi.hpp"
#include "semiroots/shift.hpp"

using namespace semiroots;
using testing_support::rel_err;
using testing_support::sample_points;

namespace {

Cplx two_rho_value(Cplx w, double c) { return -w + sqrt_branch(w, SemicircleParam(c)); }

Cplx compose(const std::vector<ShiftStep>& steps, Cplx w, double c) {
  Cplx s = two_rho_value(w, c);
  for (const auto& st : steps) s = 1.0 / (st.alpha - w - st.beta * s);
  return s;
}

bool poly_close(const Poly& p, const Poly& q, double tol) {
  const int n = std::max(p.degree(), q.degree());
  for (int k = 0; k <= n; ++k)
    if (std::abs(p[k] - q[k]) > tol) return false;
  return true;
}

}  // namespace

TEST_CASE("one shift of 2 rho has the closed form") {
  const double c = 0.8;
  const Cplx a(0.3, 0.0);
  const Cplx b(0.7, 0.0);
  const auto s = shift_once(two_rho(c), {a, b});
  const Poly F0({a, -(1.0 - b)});
  const Poly G0({a * a + 4.0 * c * b * b, -2.0 * a * (1.0 - b), 1.0 - 2.0 * b});
  // normalize to kappa = beta
  const Cplx k = b / s.kappa();
  CHECK(poly_close(s.F() * k, F0, 1e-13));
  CHECK(poly_close(s.G() * k, G0, 1e-13));
}

TEST_CASE("shift by (0, 1/2) is the semicircle transform") {
  const auto s = shift_once(two_rho(2.0), {0.0, 0.5});
  const auto semi = AlgebraicStieltjes::semicircle(2.0);
  for (Cplx w : sample_points(20, 1)) CHECK(rel_err(s(w), semi(w)) < 1e-13);
}

TEST_CASE("repeated shifts compose as linear fractional maps") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    const double c = 0.5 + std::abs(u(rng));
    std::vector<ShiftStep> steps;
    for (int k = 0; k < 3; ++k) steps.push_back({Cplx(u(rng), 0.3 * u(rng)), Cplx(0.3 + std::abs(u(rng)), 0.2 * u(rng))});
    AlgebraicStieltjes s = two_rho(c);
    for (size_t k = 0; k < steps.size(); ++k) {
      s = shift_once(s, steps[k]);
      const std::vector<ShiftStep> prefix(steps.begin(), steps.begin() + static_cast<long>(k) + 1);
      for (Cplx w : sample_points(50, 100 + trial)) CHECK(rel_err(s(w), compose(prefix, w, c)) < 1e-9);
    }
  }
}

TEST_CASE("shift_value is the direct formula") {
  const Cplx w(0.1, 1.0);
  CHECK_CLOSE(shift_value(0.5, {1.0, 2.0}, w), 1.0 / (1.0 - w - 1.0), 1e-15);
}

TEST_CASE("Mobius chains") {
  const auto id = mobius_chain({});
  CHECK(poly_close(id.A, Poly::constant(1.0), 0.0));
  CHECK(id.B.is_zero());
  CHECK(id.C.is_zero());
  CHECK(poly_close(id.D, Poly::constant(1.0), 0.0));

  const auto one = mobius_chain({{0.4, 1.5}});
  CHECK(one.A.is_zero());
  CHECK(poly_close(one.B, Poly::constant(1.0), 0.0));
  CHECK(poly_close(one.C, Poly::constant(-1.5), 0.0));
  CHECK(poly_close(one.D, Poly({0.4, -1.0}), 0.0));

  const auto two = mobius_chain({{0.1, 2.0}, {-0.3, 3.0}});
  CHECK_CLOSE(two.det, 6.0, 1e-15);
  const Poly d = two.determinant();
  CHECK(d.degree() == 0);
  CHECK_CLOSE(d[0], 6.0, 1e-14);

  const auto three = mobius_chain({{0.1, 2.0}, {-0.3, 3.0}, {0.5, 0.25}});
  CHECK(three.A.degree() == 1);
  CHECK(three.B.degree() == 2);
  CHECK(three.C.degree() == 2);
  CHECK(three.D.degree() == 3);
  // C_n ~ (-1)^n beta_1 w^(n-1), D_n ~ (-1)^n w^n
  CHECK_CLOSE(three.C[2], -2.0, 1e-15);
  CHECK_CLOSE(three.D[3], -1.0, 1e-15);

  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int n = 1; n <= 5; ++n) {
    std::vector<ShiftStep> steps;
    Cplx prod = 1.0;
    for (int k = 0; k < n; ++k) {
      steps.push_back({u(rng), 0.5 + u(rng) * 0.4});
      prod *= steps.back().beta;
    }
    const auto m = mobius_chain(steps);
    CHECK_CLOSE(m.det, prod, 1e-14);
    const Poly det = m.determinant();
    CHECK_CLOSE(det[0], prod, 1e-12);
    for (int k = 1; k <= det.degree(); ++k) CHECK(std::abs(det[k]) < 1e-10);
    for (Cplx w : sample_points(5, static_cast<unsigned>(n))) {
      const Cplx s(0.3, -0.2);
      Cplx direct = s;
      for (const auto& st : steps) direct = shift_value(direct, st, w);
      CHECK(rel_err(m.apply(s, w), direct) < 1e-12);
    }
  }
}

TEST_CASE("assembled closed forms and their degrees") {
  const double c = 1.1;
  const ShiftStep inner{0.35, 0.8};
  const auto base = assemble_FG(MobiusMat::identity(), inner, c);
  const auto direct = shift_once(two_rho(c), inner);
  for (Cplx w : sample_points(20, 6)) CHECK(rel_err(base(w), direct(w)) < 1e-12);
  CHECK(base.F().degree() == 1);
  CHECK(base.G().degree() == 2);

  const auto generic = assemble_FG(mobius_chain({{-0.2, 0.6}}), inner, c);
  CHECK(generic.F().degree() == 3);
  CHECK(generic.G().degree() == 4);
  const auto half = assemble_FG(mobius_chain({{-0.2, 0.6}}), {0.35, 0.5}, c);
  CHECK(half.F().degree() == 2);
  CHECK(half.G().degree() == 3);

  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int n = 0; n <= 3; ++n) {
    std::vector<ShiftStep> outer;
    for (int k = 0; k < n; ++k) outer.push_back({u(rng), 0.5 + 0.4 * u(rng)});
    const ShiftStep in{u(rng), 0.6};
    const auto s = shift_chain(in, outer, c);
    CHECK(s.G().degree() == 2 * n + 2);
    std::vector<ShiftStep> all = {in};
    all.insert(all.end(), outer.begin(), outer.end());
    for (Cplx w : sample_points(50, 60 + static_cast<unsigned>(n))) CHECK(rel_err(s(w), compose(all, w, c)) < 1e-9);
  }
}

TEST_CASE("two-shift expanded form") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const double c = 0.3 + std::abs(u(rng));
    const Cplx a(u(rng), 0.2 * u(rng)), b(0.7 + 0.3 * u(rng), 0.1 * u(rng)), g(u(rng), 0.0), d(0.5 + 0.3 * u(rng), 0.0);
    const auto closed = two_shift_closed(a, b, g, d, c);
    const auto composed = shift_once(shift_once(two_rho(c), {a, b}), {g, d});
    CHECK(closed.G().degree() == 4);
    CHECK_CLOSE(closed.G()[4], 1.0 - 2.0 * b, 1e-13);
    for (Cplx w : sample_points(30, 200 + static_cast<unsigned>(trial))) CHECK(rel_err(closed(w), composed(w)) < 1e-9);
  }

  // beta = 1/2 reduces F to a quadratic
  const double c = 0.7, a = 0.4, g = -0.3, d = 0.9;
  const auto half = two_shift_closed(a, 0.5, g, d, c);
  CHECK(half.G().degree() == 3);
  const Poly F({a * (-d + a * g) + c * g, -(c + a * a + a * g - d / 2.0), a});
  CHECK(poly_close(half.F(), F, 1e-14));
  CHECK_CLOSE(half.kappa(), 0.5 * d, 1e-15);
}

TEST_CASE("Haagerup transform as a two-shift") {
  const double r = 0.3, lam = 1.7;
  const double c = r * (1.0 - r);
  // inner level (-r/lam, r(1-r)) over 2 rho: beta = 1/2, then (1/lam, r(1 - lam^-2))
  const auto s = two_shift_closed(-r / lam, 0.5, 1.0 / lam, r * (1.0 - 1.0 / (lam * lam)), c);
  const double dl = lam - 1.0 / lam;
  for (Cplx w : sample_points(30, 77)) {
    const Cplx n = 2.0 / dl * (1.0 - w * w) + (2.0 * r - 1.0) * w + sqrt_branch(w, SemicircleParam(c));
    const Cplx want = dl / 2.0 * n / ((1.0 - w * w) * (r * lam + (1.0 - r) / lam - w));
    CHECK(rel_err(s(w), want) < 1e-10);
  }
}

TEST_CASE("chain Jacobi data") {
  const double c = 0.9;
  const ShiftStep inner{0.2, 0.6};
  const std::vector<ShiftStep> outer = {{-0.4, 0.3}, {0.1, 1.2}};
  const auto j = chain_jacobi_data(inner, outer, c);
  REQUIRE(j.a.size() == 3);
  CHECK_CLOSE(j.a[0], 0.1, 0.0);
  CHECK_CLOSE(j.bsq[0], 1.2, 0.0);
  CHECK_CLOSE(j.a[2], 0.2, 0.0);
  CHECK_CLOSE(j.bsq[2], 2.0 * 0.6 * c, 1e-15);
  const auto s = shift_chain(inner, outer, c);
  for (Cplx w : sample_points(20, 9)) CHECK(rel_err(eval_cfrac(j, w), s(w)) < 1e-10);
}

TEST_CASE("shifting a probability transform keeps positivity") {
  const double c = 1.0;
  const auto base = shift_once(two_rho(c), {0.3, 0.5});
  const auto j0 = extract_jacobi(series_of(base, 10), 3);
  REQUIRE(j0.positive());
  const auto up = shift_once(base, {-0.6, 0.8});
  const auto j1 = extract_jacobi(series_of(up, 10), 4);
  CHECK(j1.positive());
  CHECK_CLOSE(j1.a[0], -0.6, 1e-12);
  CHECK_CLOSE(j1.bsq[0], 0.8, 1e-12);
  for (int k = 0; k < 3; ++k) {
    CHECK_CLOSE(j1.a[k + 1], j0.a[k], 1e-10);
    CHECK_CLOSE(j1.bsq[k + 1], j0.bsq[k], 1e-10);
  }
}

TEST_CASE("degenerate shifts are reported") {
  // S = -w makes alpha - w - beta S vanish identically for (0, 1)
  const AlgebraicStieltjes lin(Poly({0.0, -1.0}), 0.0, Poly::constant(1.0), SemicircleParam(1.0));
  CHECK_THROWS_AS(shift_once(lin, {0.0, 1.0}), Error);
}
