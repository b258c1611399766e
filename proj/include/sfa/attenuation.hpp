/**
 * @file attenuation.hpp
 * @brief Acoustic attenuation of first sound in superfluid 4He: the
 *        three-phonon process, 3He viscous loss with its mean-free-path
 *        regime logic, loss-channel combination, and the inverse map from
 *        measured Q back to helium temperature.
 *
 * alpha is the energy (power) attenuation coefficient, so Q = omega/(c4*alpha).
 * The model excludes rotons: hard error above 0.7 K, validity warning above
 * 0.5 K.
 */

#ifndef SFA_ATTENUATION_HPP
#define SFA_ATTENUATION_HPP

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "sfa/constants.hpp"

namespace sfa {

inline constexpr double kValidityWarnT = 0.5;  // K
inline constexpr double kValidityMaxT = 0.7;   // K

enum class Mechanism { ThreePhonon, He3Viscous, Combined };
enum class Regime { Hydrodynamic, Ballistic };

struct ModePoint {
  double frequency_hz = 0;
  double temperature = 0;  // K

  bool validity_warning() const { return temperature > kValidityWarnT; }

  void validate() const {
    if (frequency_hz <= 0)
      throw std::domain_error("ModePoint: frequency must be positive");
    if (!(temperature > 0))
      throw std::domain_error("ModePoint: temperature must be positive");
    if (temperature > kValidityMaxT)
      throw std::domain_error(
          "ModePoint: temperature above 0.7 K, outside phonon-model validity");
  }
};

struct AttenuationBreakdown {
  double alpha = 0;  // 1/m, energy attenuation coefficient
  double q = 0;
  Mechanism mechanism = Mechanism::ThreePhonon;
  // intermediates, populated as applicable
  double tau_ph = 0;     // s
  double delta_e = 0;    // rad/s
  double rho_bar = 0;    // kg*m/s
  double bracket = 0;    // rad
  Regime regime = Regime::Hydrodynamic;
};

struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Thermal phonon lifetime tau = 1/(tau_coeff * T^5).
inline double phonon_lifetime(double temperature,
                              const HeliumProperties& he = {}) {
  if (!(temperature > 0))
    throw std::domain_error("phonon_lifetime: temperature must be positive");
  return 1.0 / (he.tau_coeff * std::pow(temperature, 5));
}

/// Three-phonon attenuation of first sound at (f, T).
inline AttenuationBreakdown three_phonon(const ModePoint& point,
                                         const HeliumProperties& he = {}) {
  point.validate();
  const auto& uc = constants();
  const double omega = 2 * std::numbers::pi * point.frequency_hz;
  const double tau = phonon_lifetime(point.temperature, he);
  const double rho_bar = 3 * uc.k_B * point.temperature / he.c4;
  const double delta_e = 3 * he.gamma_dispersion * rho_bar * rho_bar * omega;
  const double bracket =
      std::atan(2 * omega * tau) - std::atan(delta_e * tau);
  const double kt = uc.k_B * point.temperature;
  const double prefactor = (std::numbers::pi * std::numbers::pi / 60.0) *
                           std::pow(he.gruneisen_G + 1.0, 2) /
                           (he.rho4 * std::pow(uc.hbar, 3) * std::pow(he.c4, 6));
  AttenuationBreakdown b;
  b.mechanism = Mechanism::ThreePhonon;
  b.alpha = prefactor * std::pow(kt, 4) * omega * bracket;
  b.q = omega / (he.c4 * b.alpha);
  b.tau_ph = tau;
  b.delta_e = delta_e;
  b.rho_bar = rho_bar;
  b.bracket = bracket;
  return b;
}

/// 3He quasiparticle mean free path, lambda = 1/(n3 * sigma), n3 = x * rho4/m4.
inline double he3_mean_free_path(const He3Properties& he3,
                                 const HeliumProperties& he = {}) {
  if (!(he3.concentration_x > 0))
    throw std::domain_error("he3_mean_free_path: concentration must be positive");
  const double n4 = he.rho4 / he.m4;
  const double n3 = he3.concentration_x * n4;
  return 1.0 / (n3 * he3.sigma);
}

inline Regime he3_regime(double mean_free_path, double container_size) {
  return mean_free_path > container_size ? Regime::Ballistic
                                         : Regime::Hydrodynamic;
}

/// Concentration where the mean free path equals the container size D.
inline double he3_crossover_concentration(double container_size,
                                          const He3Properties& he3 = {},
                                          const HeliumProperties& he = {}) {
  if (!(container_size > 0))
    throw std::domain_error("he3_crossover_concentration: D must be positive");
  const double n4 = he.rho4 / he.m4;
  return 1.0 / (he3.sigma * container_size * n4);
}

/// 3He viscous attenuation. Hydrodynamic regime is concentration independent;
/// in the ballistic regime (lambda > D) the hydrodynamic value is scaled by
/// x/x_c(D), linear in scatterer count.
inline AttenuationBreakdown he3_attenuation(const ModePoint& point,
                                            const He3Properties& he3,
                                            double container_size,
                                            const HeliumProperties& he = {}) {
  point.validate();
  if (!(container_size > 0))
    throw std::domain_error("he3_attenuation: container size must be positive");
  const auto& uc = constants();
  const double omega = 2 * std::numbers::pi * point.frequency_hz;
  const double alpha_hydro =
      (7.0 / 3.0) * std::sqrt(uc.k_B * he3.effective_mass() / std::numbers::pi) /
      he3.sigma / (he.rho4 * std::pow(he.c4, 3)) *
      std::sqrt(point.temperature) * omega * omega;
  const double lambda = he3_mean_free_path(he3, he);
  AttenuationBreakdown b;
  b.mechanism = Mechanism::He3Viscous;
  b.regime = he3_regime(lambda, container_size);
  b.alpha = alpha_hydro;
  if (b.regime == Regime::Ballistic) {
    const double xc = he3_crossover_concentration(container_size, he3, he);
    b.alpha = alpha_hydro * (he3.concentration_x / xc);
  }
  b.q = omega / (he.c4 * b.alpha);
  return b;
}

struct CombinedAttenuation {
  std::vector<AttenuationBreakdown> mechanisms;
  AttenuationBreakdown total;
};

/// Harmonic combination of loss channels: 1/Q_total = sum 1/Q_i.
inline CombinedAttenuation combined_q(const ModePoint& point,
                                      const He3Properties& he3,
                                      double container_size,
                                      const HeliumProperties& he = {}) {
  CombinedAttenuation out;
  out.mechanisms.push_back(three_phonon(point, he));
  out.mechanisms.push_back(he3_attenuation(point, he3, container_size, he));
  const double omega = 2 * std::numbers::pi * point.frequency_hz;
  double alpha_sum = 0;
  for (const auto& m : out.mechanisms) alpha_sum += m.alpha;
  out.total.mechanism = Mechanism::Combined;
  out.total.alpha = alpha_sum;
  out.total.q = omega / (he.c4 * alpha_sum);
  return out;
}

inline constexpr double kInversionTmin = 0.005;  // K
inline constexpr double kInversionTmax = 0.45;   // K, monotonic branch only

/// Inverts three_phonon: the unique T in [5 mK, 450 mK] with the given Q
/// at frequency f, by bracketed bisection to 1e-4 relative in T.
inline double temperature_from_q(double q, double frequency_hz,
                                 const HeliumProperties& he = {}) {
  if (!(q > 0) || !(frequency_hz > 0))
    throw std::domain_error("temperature_from_q: q and f must be positive");
  auto q_of = [&](double t) {
    return three_phonon({frequency_hz, t}, he).q;
  };
  double lo = kInversionTmin, hi = kInversionTmax;
  const double q_lo = q_of(lo), q_hi = q_of(hi);
  // q decreases with temperature on the monotonic branch
  if (q > q_lo || q < q_hi)
    throw std::range_error(
        "temperature_from_q: q outside achievable range [" +
        std::to_string(q_hi) + ", " + std::to_string(q_lo) + "]");
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (q_of(mid) > q)
      lo = mid;
    else
      hi = mid;
    if ((hi - lo) / hi < 1e-4) return 0.5 * (lo + hi);
  }
  throw ConvergenceError("temperature_from_q: bisection did not converge");
}

}  // namespace sfa

#endif  // SFA_ATTENUATION_HPP
