#include "support.hpp"

#include <numbers>

#include "semiroots/jacobi.hpp"
#include "semiroots/shift.hpp"
#include "semiroots/stieltjes.hpp"

using namespace semiroots;
using testing_support::rel_err;
using testing_support::sample_points;

constexpr double kPi = std::numbers::pi;

TEST_CASE("branch values on the real axis outside the cut") {
  const SemicircleParam one(1.0);
  CHECK_CLOSE(sqrt_branch(3.0, one), std::sqrt(5.0), 1e-15);
  CHECK_CLOSE(sqrt_branch(-3.0, one), -std::sqrt(5.0), 1e-15);
  CHECK_CLOSE(sqrt_branch(Cplx(-3.0, -0.0), one), -std::sqrt(5.0), 1e-15);
  const Cplx big(1e6, 1e6);
  CHECK(rel_err(sqrt_branch(big, one), big - 2.0 / big) < 1e-9);
  CHECK_THROWS_AS(sqrt_branch(1.0, one), Error);
  CHECK_THROWS_AS(sqrt_branch(2.0, one), Error);
}

TEST_CASE("branch is conjugation equivariant and glues to boundary values") {
  const SemicircleParam p(0.7);
  for (Cplx w : sample_points(50, 3)) CHECK(std::abs(sqrt_branch(std::conj(w), p) - std::conj(sqrt_branch(w, p))) < 1e-13);

  const auto bv = boundary_values(0.0, SemicircleParam(4.0));
  CHECK_CLOSE(bv.upper, Cplx(0.0, 4.0), 1e-15);
  CHECK_CLOSE(bv.lower, Cplx(0.0, -4.0), 1e-15);
  CHECK_CLOSE(sqrt_branch(Cplx(1.0, 1e-8), SemicircleParam(1.0)), Cplx(0.0, std::sqrt(3.0)), 1e-3);
  CHECK_THROWS_AS(boundary_values(2.0, SemicircleParam(1.0)), Error);
}

TEST_CASE("rho and rho* satisfy Vieta") {
  const SemicircleParam p(1.0);
  for (Cplx w : sample_points(100, 11)) {
    const Cplx r = rho(w, p);
    const Cplx rs = rho_star(w, p);
    CHECK(rel_err(r * rs, 1.0) < 1e-12);
    CHECK(rel_err(r + rs, -w) < 1e-12);
    CHECK(std::abs(r * r + w * r + 1.0) < 1e-12 * (1.0 + std::abs(w)));
    CHECK(std::abs(r) < 1.0);
  }
  CHECK_CLOSE(rho(Cplx(0.0, 2.0), p), Cplx(0.0, std::sqrt(2.0) - 1.0), 1e-15);
  for (double y : {0.01, 0.5, 3.0, 100.0}) {
    const Cplx r = rho(Cplx(0.0, y), p);
    CHECK(std::abs(r.real()) < 1e-15);
    CHECK(r.imag() > 0.0);
    CHECK(r.imag() < 1.0);
  }
}

TEST_CASE("semicircle transform as an algebraic function") {
  const auto s = AlgebraicStieltjes::semicircle(1.0);
  CHECK_CLOSE(s(Cplx(0.0, 2.0)), Cplx(0.0, std::sqrt(2.0) - 1.0), 1e-15);
  const AlgebraicStieltjes zero(Poly{}, 0.0, Poly::constant(1.0), SemicircleParam(1.0));
  CHECK_CLOSE(zero(Cplx(0.3, 0.4)), 0.0, 0.0);
  const AlgebraicStieltjes ex(Poly({2.0, -1.0}), 0.5, Poly({1.0, -1.0}), SemicircleParam(1.0));
  for (Cplx w : sample_points(20, 5)) CHECK(std::abs(ex(std::conj(w)) - std::conj(ex(w))) < 1e-13);
  CHECK_THROWS_AS(ex(1.0), Error);
}

TEST_CASE("common roots are cancelled in the rational case") {
  const AlgebraicStieltjes r(Poly::from_roots(std::vector<Cplx>{3.0}), 0.0, Poly::from_roots(std::vector<Cplx>{3.0, 5.0}),
                             SemicircleParam(1.0));
  CHECK(r.G().degree() == 1);
  CHECK(r.F().degree() == 0);
}

TEST_CASE("semicircle decomposition") {
  const auto d = decompose_measure(AlgebraicStieltjes::semicircle(1.0));
  CHECK(d.atoms.empty());
  for (double t : {-1.5, 0.0, 0.7}) CHECK(std::abs(d.density(t) - std::sqrt(4.0 - t * t) / (2.0 * kPi)) < 1e-14);
  CHECK(std::abs(total_mass(d) - 1.0) < 1e-10);
}

TEST_CASE("decomposition of S_{c/alpha,1/2} has the expected atom") {
  const double c = 1.0;
  const double alpha = 0.6;
  const auto s = shift_once(two_rho(c), {c / alpha, 0.5});
  const auto d = decompose_measure(s);
  REQUIRE(d.atoms.size() == 1);
  CHECK(std::abs(d.atoms[0].location - (alpha + c / alpha)) < 1e-10);
  CHECK(std::abs(d.atoms[0].weight - (1.0 - alpha * alpha / c)) < 1e-10);
  CHECK(std::abs(continuum_mass(d) - alpha * alpha / c) < 1e-9);
}

TEST_CASE("rational transforms have no continuum") {
  const AlgebraicStieltjes s(Poly({1.0}), 0.0, Poly::constant(2.0), SemicircleParam(1.0));
  const auto d = decompose_measure(s);
  CHECK(d.Q.is_zero());
  CHECK(d.atoms.empty());
}

TEST_CASE("decomposition rejects poles inside the cut and double poles") {
  const AlgebraicStieltjes inside(Poly({1.0}), 1.0, Poly({-0.5, 1.0}), SemicircleParam(1.0));
  CHECK_THROWS_AS(decompose_measure(inside), Error);
  const AlgebraicStieltjes dbl(Poly({1.0}), 0.0, Poly::from_roots(std::vector<Cplx>{3.0, 3.0}), SemicircleParam(1.0));
  try {
    decompose_measure(dbl);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::HigherOrderRealPole);
  }
}

TEST_CASE("quadrature oracle on closed forms") {
  DensitySpec semi;
  semi.c = SemicircleParam(1.0);
  semi.Q = Poly::constant(2.0 * kPi);
  CHECK_CLOSE(stieltjes_numeric(semi, Cplx(0.0, 2.0)), Cplx(0.0, std::sqrt(2.0) - 1.0), 1e-9);

  DensitySpec atoms;
  atoms.atoms = {{0.0, 1.0}};
  atoms.signed_mode = true;
  const Cplx w(0.4, 1.1);
  CHECK_CLOSE(stieltjes_numeric(atoms, w), -1.0 / w, 1e-15);

  DensitySpec arcsine;
  arcsine.Q = Poly({4.0, 0.0, -1.0});
  CHECK_CLOSE(stieltjes_numeric(arcsine, 3.0), -kPi / std::sqrt(5.0), 1e-8);
}

TEST_CASE("inversion consistency for accepted transforms") {
  const double c = 0.8;
  const auto s = shift_once(shift_once(two_rho(c), {0.3, 0.4}), {-0.2, 0.7});
  const auto d = decompose_measure(s);
  for (Cplx w : sample_points(20, 17)) CHECK(std::abs(stieltjes_numeric(d, w) - s(w)) < 1e-7);
  CHECK(std::abs(total_mass(d) + series_of(s, 2).s(1).real()) < 1e-8);
}

TEST_CASE("density validation") {
  DensitySpec bad;
  bad.Q = Poly({0.5, 1.0});  // vanishes at -1/2
  CHECK_THROWS_AS(bad.validate(), Error);
  DensitySpec inside;
  inside.Q = Poly::constant(1.0);
  inside.atoms = {{0.5, 0.1}};
  CHECK_THROWS_AS(inside.validate(), Error);
  DensitySpec ok;
  ok.Q = Poly({-3.0, 1.0}) * -1.0;
  ok.atoms = {{3.0, 0.2}};
  CHECK_NOTHROW(ok.validate());
}

TEST_CASE("affine transform of Jacobi data") {
  JacobiParams semi;
  semi.a = {0.0, 0.0};
  semi.bsq = {1.0, 1.0};
  semi.tail = Tail::semicircular(1.0);
  const auto same = affine_transform(semi, 0.0, 1.0);
  CHECK(same.a == semi.a);
  CHECK(same.bsq == semi.bsq);
  const auto flipped = affine_transform(semi, 0.0, -1.0);
  CHECK(flipped.a == semi.a);
  CHECK(flipped.bsq == semi.bsq);
  const auto moved = affine_transform(semi, 1.0, 2.0);
  for (double a : moved.a) CHECK(a == 1.0);
  for (double b : moved.bsq) CHECK(b == 4.0);
  CHECK(moved.tail.c == 4.0);
  CHECK(moved.tail.center == 1.0);
  CHECK_THROWS_AS(affine_transform(semi, 0.0, 0.0), Error);

  // pushforward under t -> 2t + 1 of the semicircle, by quadrature: variance 4, centre 1
  DensitySpec d;
  d.c = SemicircleParam(4.0);
  d.Q = Poly::constant(2.0 * kPi * 4.0);
  for (Cplx w : sample_points(10, 9)) {
    const Cplx want = stieltjes_numeric(d, w - 1.0);
    CHECK(std::abs(eval_cfrac(moved, w) - want) < 1e-9);
  }
}

TEST_CASE("sqrt Taylor coefficients") {
  const SemicircleParam p(1.0);
  const Cplx z0(3.0, 0.5);
  const auto t = sqrt_taylor(z0, p, 10);
  const Cplx h(0.01, -0.02);
  Cplx sum;
  for (int k = 9; k >= 0; --k) sum = sum * h + t[static_cast<size_t>(k)];
  CHECK(std::abs(sum - sqrt_branch(z0 + h, p)) < 1e-12);
}
