/**
 * @file microwave.hpp
 * @brief Microwave readout chain: red-detuned pump frequency plan,
 *        intracavity photon number from incident power (single drive
 *        port input-output), and the phase-noise floor required for a
 *        10% thermal-motion measurement, calibrated in T*Q_m.
 */

#ifndef SFA_MICROWAVE_HPP
#define SFA_MICROWAVE_HPP

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sfa/constants.hpp"

namespace sfa {

struct MicrowaveCavity {
  double omega_c = 2 * std::numbers::pi * 10.6e9;   // rad/s
  double kappa_int = 2 * std::numbers::pi * 31.0;   // rad/s
  double kappa_in = 2 * std::numbers::pi * 230.0;   // rad/s
  double kappa_out = 2 * std::numbers::pi * 230.0;  // rad/s

  double kappa_tot() const { return kappa_int + kappa_in + kappa_out; }

  void validate() const {
    if (omega_c <= 0 || kappa_int <= 0 || kappa_in <= 0 || kappa_out <= 0)
      throw std::invalid_argument("MicrowaveCavity: rates must be positive");
  }
};

struct FrequencyPlan {
  double pump = 0;      // rad/s
  double sideband = 0;  // rad/s
  bool degenerate = false;
};

/// Pump at omega_c - omega_He so acoustic motion upconverts onto the cavity.
inline FrequencyPlan frequency_plan(const MicrowaveCavity& cavity,
                                    double f_he_hz) {
  cavity.validate();
  if (f_he_hz < 0)
    throw std::domain_error("frequency_plan: acoustic frequency must be >= 0");
  FrequencyPlan p;
  p.pump = cavity.omega_c - 2 * std::numbers::pi * f_he_hz;
  p.sideband = cavity.omega_c;
  p.degenerate = (f_he_hz == 0);
  return p;
}

/// Steady-state intracavity photon number for incident power at detuning
/// Delta from resonance: n = (P/hbar omega_p) 4 kappa_in / (kappa_tot^2 + 4 Delta^2).
inline double intracavity_photons(double power_in, double detuning,
                                  const MicrowaveCavity& cavity = {}) {
  cavity.validate();
  if (power_in < 0)
    throw std::domain_error("intracavity_photons: power must be >= 0");
  const double omega_p = cavity.omega_c - std::fabs(detuning);
  const double kt = cavity.kappa_tot();
  return power_in / (constants().hbar * omega_p) * 4 * cavity.kappa_in /
         (kt * kt + 4 * detuning * detuning);
}

/// Calibration anchor for the phase-noise budget.
struct NoiseBudgetCalibration {
  double t_ref = 0.014;     // K
  double q_ref = 1e10;      // mechanical Q
  double l_ref = -143.0;    // dBc/Hz
  double offset_hz = 8000;  // Hz from carrier

  void validate() const {
    if (t_ref <= 0 || q_ref <= 0)
      throw std::invalid_argument("NoiseBudgetCalibration: t_ref and q_ref must be positive");
  }
};

/// Allowed phase-noise floor for 10% thermal-motion precision. The peak
/// thermal sideband density scales as T*Q_m, so the requirement relaxes by
/// 10 dB per decade of T*Q_m from the calibration point.
inline double phase_noise_requirement(double temperature, double q_m,
                                      const NoiseBudgetCalibration& cal = {}) {
  cal.validate();
  if (!(temperature > 0) || !(q_m > 0))
    throw std::domain_error("phase_noise_requirement: T and Q_m must be positive");
  return cal.l_ref +
         10 * std::log10((temperature * q_m) / (cal.t_ref * cal.q_ref));
}

}  // namespace sfa

#endif  // SFA_MICROWAVE_HPP
