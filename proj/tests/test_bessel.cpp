#include <doctest.h>

#include <cmath>

#include "sfa/bessel.hpp"

namespace bz = sfa::bessel;

TEST_CASE("series evaluation agrees with the standard library") {
  for (int m = 0; m <= 4; ++m) {
    for (double x : {0.1, 1.0, 3.7, 8.2, 14.9, 20.5}) {
      CHECK(bz::j(m, x) ==
            doctest::Approx(std::cyl_bessel_j(m, x)).epsilon(1e-12));
    }
  }
}

TEST_CASE("tabulated zeros of J'") {
  CHECK(bz::j_prime_zero(0, 1) == doctest::Approx(3.8317059702).epsilon(1e-10));
  CHECK(bz::j_prime_zero(1, 1) == doctest::Approx(1.8411837813).epsilon(1e-10));
}

TEST_CASE("zero of J'0 verified by sign change of an independent evaluation") {
  // J'0(x) = -J1(x); bracket the root with std::cyl_bessel_j
  const double z = bz::j_prime_zero(0, 1);
  CHECK(std::cyl_bessel_j(1, z - 1e-8) * std::cyl_bessel_j(1, z + 1e-8) < 0);
}

TEST_CASE("residuals below 1e-12 over the full table") {
  for (int m = 0; m <= bz::kMaxOrder; ++m) {
    for (int n = 1; n <= bz::kMaxIndex; ++n) {
      CHECK(std::fabs(bz::j_prime(m, bz::j_prime_zero(m, n))) < 1e-12);
      CHECK(std::fabs(bz::j(m, bz::j_zero(m, n))) < 1e-12);
    }
  }
}

TEST_CASE("zeros of J and J' interlace") {
  // m = 0 skips the trivial extremum at the origin, so the ordering starts
  // with the J zero instead
  for (int n = 1; n <= bz::kMaxIndex; ++n) {
    CHECK(bz::j_zero(0, n) < bz::j_prime_zero(0, n));
    if (n < bz::kMaxIndex)
      CHECK(bz::j_prime_zero(0, n) < bz::j_zero(0, n + 1));
  }
  for (int m = 1; m <= bz::kMaxOrder; ++m) {
    for (int n = 1; n <= bz::kMaxIndex; ++n) {
      CHECK(bz::j_prime_zero(m, n) < bz::j_zero(m, n));
      if (n < bz::kMaxIndex)
        CHECK(bz::j_zero(m, n) < bz::j_prime_zero(m, n + 1));
    }
  }
}

TEST_CASE("out-of-range indices are rejected") {
  CHECK_THROWS_AS(bz::j_prime_zero(5, 1), std::out_of_range);
  CHECK_THROWS_AS(bz::j_prime_zero(0, 6), std::out_of_range);
  CHECK_THROWS_AS(bz::j_prime_zero(-1, 1), std::out_of_range);
  CHECK_THROWS_AS(bz::j_zero(0, 0), std::out_of_range);
}
