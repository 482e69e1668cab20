#include "support.hpp"

#include <algorithm>

#include "semiroots/numeric.hpp"
#include "semiroots/stieltjes.hpp"

using namespace semiroots;
using testing_support::rel_err;

TEST_CASE("poly arithmetic and evaluation") {
  const Poly p({1.0, -3.0, 2.0});  // 2w^2 - 3w + 1
  CHECK(p.degree() == 2);
  CHECK_CLOSE(p(2.0), 3.0, 1e-15);
  CHECK_CLOSE((p * p)(1.5), p(1.5) * p(1.5), 1e-13);
  CHECK((p - p).is_zero());
  CHECK(Poly({1.0, 0.0, 0.0}).degree() == 0);
  CHECK_CLOSE(p.derivative()(0.0), -3.0, 0.0);

  const auto [q, r] = p.deflate(1.0);
  CHECK_CLOSE(r, 0.0, 1e-15);
  CHECK(q.degree() == 1);
  CHECK_CLOSE(q(0.5), 0.0, 1e-15);

  const auto [dq, dr] = Poly({5.0, 0.0, 0.0, 1.0}).divmod(Poly({1.0, 1.0}));
  CHECK(dr.degree() <= 0);
  CHECK_CLOSE(dr[0], 4.0, 1e-14);  // w^3 + 5 at w = -1
  CHECK(dq.degree() == 2);

  const Poly shifted = p.taylor_shift(2.0);
  CHECK_CLOSE(shifted(0.25), p(2.25), 1e-13);
}

TEST_CASE("trimming drops only negligible leading terms") {
  const Poly p({1.0, 2.0, 1e-18});
  CHECK(p.degree() == 2);
  CHECK(p.trimmed(1e-14).degree() == 1);
  CHECK(Poly({1e-18}).trimmed(1e-14).degree() == 0);
}

TEST_CASE("roots of a polynomial built from known roots") {
  const std::vector<Cplx> want = {{-3.0, 0.0}, {0.5, 2.0}, {0.5, -2.0}, {4.0, 0.0}, {1e-3, 0.0}};
  const Poly p = Poly::from_roots(want, 2.5);
  const auto got = poly_roots(p).flattened();
  REQUIRE(got.size() == want.size());
  for (const auto& w : want) {
    const auto best = std::min_element(got.begin(), got.end(), [&](Cplx a, Cplx b) { return std::abs(a - w) < std::abs(b - w); });
    CHECK(std::abs(*best - w) < 1e-10);
  }
}

TEST_CASE("multiple roots are clustered with multiplicity") {
  const std::vector<Cplx> want = {3.0, 3.0, -1.0};
  const auto rs = poly_roots(Poly::from_roots(want));
  CHECK(rs.total_multiplicity() == 3);
  bool found_double = false;
  for (const auto& r : rs.roots)
    if (r.multiplicity == 2) {
      found_double = true;
      CHECK(std::abs(r.location - 3.0) < 1e-6);
    }
  CHECK(found_double);
}

TEST_CASE("zero roots are exact") {
  const auto rs = poly_roots(Poly({0.0, 0.0, 1.0, 1.0}));
  CHECK(rs.total_multiplicity() == 3);
  int zeros = 0;
  for (const auto& r : rs.roots)
    if (r.location == Cplx{}) zeros += r.multiplicity;
  CHECK(zeros == 2);
}

TEST_CASE("series reciprocal of w - a is a geometric series") {
  const double a = 0.7;
  const auto s = series_reciprocal(SeriesAtInfinity::exact(Poly({-a, 1.0}), 8));
  CHECK(s.poly_part().is_zero());
  for (int k = 1; k <= 8; ++k) CHECK_CLOSE(s.s(k), std::pow(a, k - 1), 1e-14);
}

TEST_CASE("series product and order bookkeeping") {
  const auto x = series_reciprocal(SeriesAtInfinity::exact(Poly({-1.0, 1.0}), 6));  // 1/(w-1)
  const auto y = SeriesAtInfinity::exact(Poly({-1.0, 1.0}), 6);
  const auto one = series_mul(x, y);
  CHECK_CLOSE(one.coef(0), 1.0, 1e-14);
  for (int k = 1; k <= one.order(); ++k) CHECK_CLOSE(one.s(k), 0.0, 1e-14);
  CHECK_THROWS_AS(x.s(x.order() + 1), Error);
}

TEST_CASE("sqrt series agrees with the branch at large w") {
  const double c = 1.3;
  const auto s = sqrt_series(c, 9);
  const SemicircleParam p(c);
  for (Cplx w : {Cplx(40.0, 3.0), Cplx(-25.0, 10.0), Cplx(0.0, 30.0)}) {
    Cplx sum = s.poly_part()(w);
    for (int k = 1; k <= 9; ++k) sum += s.s(k) * std::pow(w, -k);
    CHECK(rel_err(sum, sqrt_branch(w, p)) < 1e-12);
  }
}

TEST_CASE("reciprocal treats a cancelled leading term as zero") {
  const SeriesAtInfinity s(Poly({1.0, 1e-17}), {2.0, 0.0, 0.0, 0.0}, 4);
  const auto r = series_reciprocal(s);
  CHECK_CLOSE(r.coef(0), 1.0, 1e-15);
}
