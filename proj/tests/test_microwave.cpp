#include <doctest.h>

#include <cmath>
#include <numbers>

#include "sfa/microwave.hpp"

using namespace sfa;
constexpr double kTwoPi = 2 * std::numbers::pi;

TEST_CASE("red-detuned frequency plan") {
  MicrowaveCavity cav;
  const auto p = frequency_plan(cav, 8112);
  CHECK(p.sideband == doctest::Approx(cav.omega_c));
  // difference of ~6.7e10 rad/s carriers: allow for cancellation at 1 ulp
  CHECK(p.sideband - p.pump == doctest::Approx(kTwoPi * 8112).epsilon(1e-9));
  CHECK_FALSE(p.degenerate);
  CHECK(frequency_plan(cav, 0).degenerate);
}

TEST_CASE("intracavity photon numbers match the reported powers") {
  const double detuning = kTwoPi * 8112;
  const double n_low = intracavity_photons(0.4e-12, detuning);
  CHECK(n_low == doctest::Approx(3.165e4).epsilon(2e-3));
  CHECK(std::fabs(n_low - 3e4) / 3e4 < 0.25);
  const double n_high = intracavity_photons(4e-9, detuning);
  CHECK(std::fabs(n_high - 3e8) / 3e8 < 0.25);
}

TEST_CASE("photon number is linear in power, even and maximal at zero detuning") {
  const double detuning = kTwoPi * 8112;
  CHECK(intracavity_photons(2e-12, detuning) ==
        doctest::Approx(2 * intracavity_photons(1e-12, detuning)).epsilon(1e-12));
  CHECK(intracavity_photons(1e-12, detuning) ==
        doctest::Approx(intracavity_photons(1e-12, -detuning)).epsilon(1e-12));
  CHECK(intracavity_photons(1e-12, 0.0) > intracavity_photons(1e-12, detuning));
  CHECK_THROWS_AS(intracavity_photons(-1e-12, 0.0), std::domain_error);
}

TEST_CASE("phase-noise budget calibration point and model check") {
  CHECK(phase_noise_requirement(0.014, 1e10) == doctest::Approx(-143.0).epsilon(1e-12));
  const double l = phase_noise_requirement(0.008, 1e11);
  CHECK(l == doctest::Approx(-135.43).epsilon(1e-3));
  CHECK(std::fabs(l - (-136.0)) < 1.5);
}

TEST_CASE("budget relaxes by exactly 10 dB per decade of T*Q") {
  const double l0 = phase_noise_requirement(0.014, 1e10);
  CHECK(phase_noise_requirement(0.14, 1e10) == doctest::Approx(l0 + 10).epsilon(1e-12));
  CHECK(phase_noise_requirement(0.014, 1e11) == doctest::Approx(l0 + 10).epsilon(1e-12));
  CHECK(phase_noise_requirement(0.028, 1e10) > l0);  // monotone in T
  CHECK_THROWS_AS(phase_noise_requirement(0.0, 1e10), std::domain_error);
  CHECK_THROWS_AS(phase_noise_requirement(0.014, 0.0), std::domain_error);
}
