/**
 * @file thermal.hpp
 * @brief Thermalization of the helium cell: Kapitza boundary resistance,
 *        phonon-gas heat capacity, suspension-wire conductance
 *        (Wiedemann-Franz), the thermal time constant, and steady-state
 *        heat-leak budgets over the series network
 *        base -- wire -- cell wall -- Kapitza -- helium.
 */

#ifndef SFA_THERMAL_HPP
#define SFA_THERMAL_HPP

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sfa/attenuation.hpp"  // ConvergenceError
#include "sfa/constants.hpp"
#include "sfa/geometry.hpp"

namespace sfa {

/// Suspension wire. Defaults: 0.13 cm diameter, 6.7 cm copper wire.
struct WireGeometry {
  double diameter = 0.0013;  // m
  double length = 0.067;     // m
  MaterialProperties material = lookup_material("copper");

  double cross_section() const {
    return std::numbers::pi * diameter * diameter / 4;
  }
  void validate() const {
    if (diameter <= 0 || length <= 0)
      throw std::invalid_argument("WireGeometry: dimensions must be positive");
  }
};

struct ThermalReport {
  double r_kapitza = 0;      // K/W
  double r_wire = 0;         // K/W
  double heat_capacity = 0;  // J/K
  double time_constant = 0;  // s
  double t_helium = 0;       // K
  double q_dot = 0;          // W
};

/// Kapitza boundary resistance at a solid/superfluid interface,
/// R_k = 15 hbar^3 rho_s c_s^3 / (2 pi^2 k_B^4 T^3 rho4 c4 A).
inline double kapitza_resistance(double temperature, double area,
                                 const MaterialProperties& solid,
                                 const HeliumProperties& fluid = {}) {
  if (!(temperature > 0) || !(area > 0))
    throw std::domain_error("kapitza_resistance: T and area must be positive");
  const auto& uc = constants();
  return 15 * std::pow(uc.hbar, 3) * solid.rho * std::pow(solid.c_sound, 3) /
         (2 * std::numbers::pi * std::numbers::pi * std::pow(uc.k_B, 4) *
          std::pow(temperature, 3) * fluid.rho4 * fluid.c4 * area);
}

/// Phonon-gas heat capacity of the helium sample,
/// C = (2 pi^2 / 15) k_B (k_B T / (hbar c4))^3 V.
inline double helium_heat_capacity(double temperature, double volume,
                                   const HeliumProperties& fluid = {}) {
  if (!(temperature > 0) || !(volume > 0))
    throw std::domain_error("helium_heat_capacity: T and V must be positive");
  const auto& uc = constants();
  return (2 * std::numbers::pi * std::numbers::pi / 15) * uc.k_B *
         std::pow(uc.k_B * temperature / (uc.hbar * fluid.c4), 3) * volume;
}

/// Thermal resistance of the suspension wire, R = l / (kappa(T) A) with
/// kappa(T) = L0 T / rho_el and rho_el = rho_300K / RRR.
inline double wire_thermal_resistance(double temperature,
                                      const WireGeometry& wire = {}) {
  wire.validate();
  if (!(temperature > 0))
    throw std::domain_error("wire_thermal_resistance: T must be positive");
  if (!wire.material.rrr || !wire.material.resistivity_300k)
    throw std::invalid_argument(
        "wire_thermal_resistance: material lacks rrr/resistivity_300k");
  const double rho_el = *wire.material.resistivity_300k / *wire.material.rrr;
  const double kappa = constants().lorenz_number * temperature / rho_el;
  return wire.length / (kappa * wire.cross_section());
}

/// tau = R_k(T, A) * C(T, V); T independent since T^-3 cancels T^3.
inline double thermal_time_constant(double temperature,
                                    const CylinderGeometry& geom,
                                    const MaterialProperties& solid,
                                    const HeliumProperties& fluid = {}) {
  return kapitza_resistance(temperature, geom.area(), solid, fluid) *
         helium_heat_capacity(temperature, geom.volume(), fluid);
}

/// Series network from the mixing-chamber plate to the helium sample.
struct ThermalNetwork {
  CylinderGeometry cell;
  WireGeometry wire;
  MaterialProperties solid = lookup_material("niobium");
  HeliumProperties fluid;
};

namespace detail {

// Resistances are T dependent; evaluate each segment at its mean
// temperature and fix-point on the intermediate wall temperature.
struct SeriesSolve {
  double r_wire;
  double r_kapitza;
  double t_wall;
};

inline SeriesSolve solve_series(double t_helium, double t_base,
                                const ThermalNetwork& net) {
  double t_wall = 0.5 * (t_helium + t_base);
  double r_w = 0, r_k = 0;
  for (int it = 0; it < 100; ++it) {
    r_w = wire_thermal_resistance(0.5 * (t_wall + t_base), net.wire);
    r_k = kapitza_resistance(0.5 * (t_helium + t_wall), net.cell.area(),
                             net.solid, net.fluid);
    const double t_next = t_base + (t_helium - t_base) * r_w / (r_w + r_k);
    if (std::fabs(t_next - t_wall) <= 1e-6 * t_wall)
      return {r_w, r_k, t_next};
    t_wall = t_next;
  }
  throw ConvergenceError("thermal network: wall-temperature fixed point did not converge");
}

}  // namespace detail

/// Heat load that holds the helium at target_T against a base at base_T.
inline double required_heat_leak(double target_t, double base_t,
                                 const ThermalNetwork& net = {}) {
  if (!(base_t > 0) || !(target_t > base_t))
    throw std::domain_error("required_heat_leak: need target_T > base_T > 0");
  const auto s = detail::solve_series(target_t, base_t, net);
  return (target_t - base_t) / (s.r_wire + s.r_kapitza);
}

/// Helium temperature reached for a given steady heat load into the sample.
/// Bisection on required_heat_leak, which is monotone in the target.
inline double steady_state_temperature(double base_t, double q_dot,
                                       const ThermalNetwork& net = {}) {
  if (!(base_t > 0) || !(q_dot >= 0))
    throw std::domain_error("steady_state_temperature: need base_T > 0, q_dot >= 0");
  if (q_dot == 0) return base_t;
  double lo = base_t, hi = base_t * 2;
  int expand = 0;
  while (required_heat_leak(hi, base_t, net) < q_dot) {
    lo = hi;
    hi *= 2;
    if (++expand > 60)
      throw ConvergenceError("steady_state_temperature: bracket expansion failed");
  }
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (required_heat_leak(mid, base_t, net) < q_dot)
      lo = mid;
    else
      hi = mid;
    if ((hi - lo) / hi < 1e-6) return 0.5 * (lo + hi);
  }
  throw ConvergenceError("steady_state_temperature: bisection did not converge");
}

/// Full report at a given helium temperature and base.
inline ThermalReport thermal_report(double t_helium, double t_base,
                                    const ThermalNetwork& net = {}) {
  ThermalReport r;
  r.r_kapitza = kapitza_resistance(t_helium, net.cell.area(), net.solid, net.fluid);
  r.r_wire = wire_thermal_resistance(t_helium, net.wire);
  r.heat_capacity = helium_heat_capacity(t_helium, net.cell.volume(), net.fluid);
  r.time_constant = thermal_time_constant(t_helium, net.cell, net.solid, net.fluid);
  r.t_helium = t_helium;
  r.q_dot = t_base < t_helium ? required_heat_leak(t_helium, t_base, net) : 0.0;
  return r;
}

}  // namespace sfa

#endif  // SFA_THERMAL_HPP
