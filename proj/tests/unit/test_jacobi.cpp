#include "support.hpp"

#include <Eigen/Dense>
#include <numbers>
#include <random>

#include "semiroots/jacobi.hpp"
#include "semiroots/shift.hpp"
#include "semiroots/stieltjes.hpp"

using namespace semiroots;
using testing_support::rel_err;
using testing_support::sample_points;

namespace {

// The (r, lambda) transform written out directly from its closed form.
Cplx haagerup_direct(double r, double lam, Cplx w) {
  const double c = r * (1.0 - r);
  const double d = lam - 1.0 / lam;
  const Cplx root = sqrt_branch(w, SemicircleParam(c));
  const Cplx n = 2.0 / d * (1.0 - w * w) + (2.0 * r - 1.0) * w + root;
  return d / 2.0 * n / ((1.0 - w * w) * (r * lam + (1.0 - r) / lam - w));
}

AlgebraicStieltjes haagerup_algebraic(double r, double lam) {
  const double d = lam - 1.0 / lam;
  const Poly one_minus_w2({1.0, 0.0, -1.0});
  const Poly F = one_minus_w2 + Poly({0.0, d / 2.0 * (2.0 * r - 1.0)});
  const Poly G = one_minus_w2 * Poly({r * lam + (1.0 - r) / lam, -1.0});
  return AlgebraicStieltjes(F, d / 2.0, G, SemicircleParam(r * (1.0 - r)));
}

JacobiParams haagerup_params(double r, double lam) {
  JacobiParams j;
  j.a = {1.0 / lam, -r / lam};
  j.bsq = {r * (1.0 - 1.0 / (lam * lam)), r * (1.0 - r)};
  j.tail = Tail::semicircular(r * (1.0 - r));
  return j;
}

}  // namespace

TEST_CASE("semicircle has constant Jacobi data") {
  const auto j = extract_jacobi(series_of(AlgebraicStieltjes::semicircle(1.0), 12), 4);
  REQUIRE(j.depth() == 4);
  for (int n = 0; n < 4; ++n) {
    CHECK_CLOSE(j.a[n], 0.0, 1e-12);
    CHECK_CLOSE(j.bsq[n], 1.0, 1e-12);
  }
  CHECK(j.positive());
}

TEST_CASE("extraction preconditions") {
  const auto s = series_of(AlgebraicStieltjes::semicircle(1.0), 6);
  CHECK_THROWS_AS(extract_jacobi(s, 3), Error);
  const auto unnormalized = series_scale(s, 2.0);
  CHECK_THROWS_AS(extract_jacobi(unnormalized, 1), Error);

  // 1/(1 - w): a single atom, the fraction stops after one level
  const AlgebraicStieltjes atom(Poly::constant(1.0), 0.0, Poly({1.0, -1.0}), SemicircleParam(1.0));
  try {
    extract_jacobi(series_of(atom, 8), 2);
    FAIL("expected ZeroBeta");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ZeroBeta);
  }
}

TEST_CASE("complex parameters are rejected as NotReal") {
  const auto s = shift_once(two_rho(1.0), {Cplx(0.3, 0.5), 0.5});
  CHECK_THROWS_AS(extract_jacobi(series_of(s, 8), 2), Error);
  const auto cj = extract_jacobi_complex(series_of(s, 8), 2);
  CHECK_CLOSE(cj.a[0], Cplx(0.3, 0.5), 1e-12);
}

TEST_CASE("closed-form b_0 and a_1 for the quotient example") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.2, 2.0);
  int tried = 0;
  while (tried < 30) {
    const double c = u(rng);
    const double a = (rng() % 2 ? 1.0 : -1.0) * (2.0 * std::sqrt(c) + u(rng));
    const double b = (a > 0 ? 1.0 : -1.0) * u(rng) * 2.0;
    if (a * b - 2.0 * c < 0.2) continue;
    ++tried;
    const AlgebraicStieltjes s(Poly({b / b, -1.0 / b}), 1.0 / b, Poly({a, -1.0}), SemicircleParam(c));
    const auto j = extract_jacobi(series_of(s, 8), 2);
    const double ab2c = a * b - 2.0 * c;
    CHECK(rel_err(j.a[0], ab2c / b) < 1e-10);
    CHECK(rel_err(j.bsq[0], 2.0 * c * ab2c / (b * b)) < 1e-10);
    CHECK(rel_err(j.a[1], -(b * b - 2.0 * a * b + 4.0 * c) * c / (ab2c * b)) < 1e-9);
  }
}

TEST_CASE("Haagerup transform and its two-level expansion") {
  const double r = 1.0 / 3.0;
  const double lam = 2.0;
  const auto j = extract_jacobi(series_of(haagerup_algebraic(r, lam), 14), 5);
  CHECK_CLOSE(j.a[0], 0.5, 1e-12);
  CHECK_CLOSE(j.bsq[0], 0.25, 1e-12);
  CHECK_CLOSE(j.a[1], -1.0 / 6.0, 1e-12);
  for (int n = 1; n < 5; ++n) CHECK_CLOSE(j.bsq[n], 2.0 / 9.0, 1e-11);
  for (int n = 2; n < 5; ++n) CHECK_CLOSE(j.a[n], 0.0, 1e-11);

  const auto params = haagerup_params(r, lam);
  for (Cplx w : sample_points(50, 21)) {
    CHECK(rel_err(eval_cfrac(params, w), haagerup_direct(r, lam, w)) < 1e-12);
    CHECK(rel_err(haagerup_algebraic(r, lam)(w), haagerup_direct(r, lam, w)) < 1e-12);
  }

  const auto m = jacobi_matrix(params, 4);
  CHECK_CLOSE(m.diag[0], 0.5, 1e-15);
  CHECK_CLOSE(m.diag[1], -1.0 / 6.0, 1e-15);
  CHECK_CLOSE(m.diag[2], 0.0, 0.0);
  CHECK_CLOSE(m.offdiag[0], 0.5, 1e-15);
  CHECK_CLOSE(m.offdiag[1], std::sqrt(2.0 / 9.0), 1e-15);
  CHECK_CLOSE(m.offdiag[2], std::sqrt(2.0 / 9.0), 1e-15);
}

TEST_CASE("continued fraction evaluation") {
  JacobiParams empty;
  empty.tail = Tail::semicircular(1.5);
  for (Cplx w : sample_points(10, 2)) CHECK_CLOSE(eval_cfrac(empty, w), rho(w, SemicircleParam(1.5)) / 1.5, 1e-15);

  const double c = 0.9;
  const double alpha = 0.4;
  const double beta = 0.7;
  JacobiParams one;
  one.a = {alpha};
  one.bsq = {2.0 * beta * c};
  one.tail = Tail::semicircular(c);
  const auto closed = shift_once(two_rho(c), {alpha, beta});
  for (Cplx w : sample_points(50, 4)) CHECK(rel_err(eval_cfrac(one, w), closed(w)) < 1e-10);

  JacobiParams trunc;
  trunc.a = {1.0};
  CHECK_THROWS_AS(eval_cfrac(trunc, 1.0), Error);
}

TEST_CASE("series roundtrip through the continued fraction") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> ua(-1.0, 1.0);
  std::uniform_real_distribution<double> ub(0.2, 2.0);
  for (int trial = 0; trial < 25; ++trial) {
    JacobiParams j;
    const int depth = 1 + trial % 4;
    for (int k = 0; k < depth; ++k) {
      j.a.push_back(ua(rng));
      j.bsq.push_back(ub(rng));
    }
    j.tail = Tail::semicircular(ub(rng));
    const auto back = extract_jacobi(series_of_cfrac(j, 2 * depth + 2), depth);
    for (int k = 0; k < depth; ++k) {
      CHECK(rel_err(back.a[k], j.a[k]) < 1e-8);
      CHECK(rel_err(back.bsq[k], j.bsq[k]) < 1e-8);
    }
  }
}

TEST_CASE("semicircle moments are Catalan numbers") {
  const double c = 1.7;
  const auto s = series_of(AlgebraicStieltjes::semicircle(c), 14);
  std::vector<double> cat = {1.0};
  for (int n = 1; n <= 6; ++n) {
    double sum = 0.0;
    for (int i = 0; i < n; ++i) sum += cat[i] * cat[n - 1 - i];
    cat.push_back(sum);
  }
  for (int k = 0; k <= 6; ++k) {
    CHECK(rel_err(-s.s(2 * k + 1), std::pow(c, k) * cat[k]) < 1e-10);
    CHECK_CLOSE(s.s(2 * k + 2), 0.0, 1e-10);
  }
}

TEST_CASE("symmetric densities give vanishing a_n") {
  // sqrt(4 - t^2) / (2 pi (1 + t^2/9)): an even density with its moments from quadrature
  DensitySpec d;
  d.Q = Poly({1.0, 0.0, 1.0 / 9.0}) * (2.0 * std::numbers::pi);
  const auto m = moments(d, 10);
  const double mass = m[0];
  std::vector<double> normed;
  for (double x : m) normed.push_back(x / mass);
  const auto j = extract_jacobi(series_from_moments(normed), 4);
  for (double a : j.a) CHECK(std::abs(a) < 1e-8);
  CHECK(j.positive());
}

TEST_CASE("positive data is Herglotz") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> re(-3.0, 3.0);
  std::uniform_real_distribution<double> im(0.01, 3.0);
  JacobiParams j;
  j.a = {0.3, -1.2, 0.5};
  j.bsq = {0.4, 2.0, 0.1};
  j.tail = Tail::semicircular(0.6, 0.2);
  for (int k = 0; k < 50; ++k) CHECK(eval_cfrac(j, Cplx(re(rng), im(rng))).imag() > 0.0);
}

TEST_CASE("Jacobi matrices") {
  JacobiParams semi;
  semi.tail = Tail::semicircular(1.0);
  const auto t = jacobi_matrix(semi, 3);
  CHECK(t.diag == std::vector<double>{0.0, 0.0, 0.0});
  CHECK(t.offdiag == std::vector<double>{1.0, 1.0});

  const double c = 1.3;
  JacobiParams one;
  one.a = {0.25};
  one.bsq = {2.0 * 0.4 * c};
  one.tail = Tail::semicircular(c);
  const auto m = jacobi_matrix(one, 4);
  CHECK(m.diag == std::vector<double>{0.25, 0.0, 0.0, 0.0});
  CHECK_CLOSE(m.offdiag[0], std::sqrt(0.8 * c), 1e-15);
  CHECK_CLOSE(m.offdiag[1], std::sqrt(c), 1e-15);
  CHECK_CLOSE(m.offdiag[2], std::sqrt(c), 1e-15);

  JacobiParams neg = one;
  neg.bsq[0] = -0.1;
  CHECK_THROWS_AS(jacobi_matrix(neg, 3), Error);
  JacobiParams shortj;
  shortj.a = {0.0};
  CHECK_THROWS_AS(jacobi_matrix(shortj, 2), Error);
}

TEST_CASE("resolvent of a tridiagonal block") {
  TriJacobi one{1, {0.7}, {}};
  const Cplx w(0.2, 0.5);
  CHECK_CLOSE(resolvent00(one, w), 1.0 / (0.7 - w), 1e-15);

  JacobiParams semi;
  semi.tail = Tail::semicircular(1.0);
  CHECK_CLOSE(resolvent00(jacobi_matrix(semi, 200), Cplx(0.0, 2.0)), Cplx(0.0, std::sqrt(2.0) - 1.0), 1e-6);

  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> ua(-1.0, 1.0);
  std::uniform_real_distribution<double> ub(0.1, 1.5);
  for (int n = 1; n <= 20; ++n) {
    TriJacobi t;
    t.n = n;
    for (int k = 0; k < n; ++k) t.diag.push_back(ua(rng));
    for (int k = 0; k + 1 < n; ++k) t.offdiag.push_back(ub(rng));
    for (Cplx z : sample_points(3, 40 + n)) {
      const Cplx got = resolvent00(t, z);
      CHECK(rel_err(got, eval_cfrac(params_of(t), z)) < 1e-12);

      Eigen::MatrixXcd dense = Eigen::MatrixXcd::Zero(n, n);
      for (int k = 0; k < n; ++k) dense(k, k) = t.diag[k] - z;
      for (int k = 0; k + 1 < n; ++k) dense(k, k + 1) = dense(k + 1, k) = t.offdiag[k];
      Eigen::VectorXcd e0 = Eigen::VectorXcd::Zero(n);
      e0(0) = 1.0;
      const Eigen::VectorXcd x = dense.partialPivLu().solve(e0);
      CHECK(rel_err(got, x(0)) < 1e-10);
    }
  }
}
