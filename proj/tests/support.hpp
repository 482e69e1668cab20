#pragma once

#include <complex>
#include <random>
#include <vector>

#include <doctest.h>

#include "semiroots/numeric.hpp"

namespace testing_support {

using semiroots::Cplx;

inline double rel_err(Cplx got, Cplx want) { return std::abs(got - want) / std::max(1.0, std::abs(want)); }

// Points off the real axis in both half planes.
inline std::vector<Cplx> sample_points(int n, unsigned seed, double spread = 4.0) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> re(-spread, spread);
  std::uniform_real_distribution<double> im(0.2, spread);
  std::vector<Cplx> out;
  for (int k = 0; k < n; ++k) out.emplace_back(re(rng), (k % 2 == 0 ? 1.0 : -1.0) * im(rng));
  return out;
}

}  // namespace testing_support

#define CHECK_CLOSE(got, want, tol) CHECK(std::abs(semiroots::Cplx(got) - semiroots::Cplx(want)) <= (tol))
