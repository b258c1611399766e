/**
 * @file constants.hpp
 * @brief Universal constants and material parameters for the superfluid
 *        helium resonator model.
 *
 * All quantities are SI (kelvin, meter, second, kilogram, watt). Angular
 * frequencies are rad/s, cyclic frequencies Hz; each function documents
 * which it takes. Every physical parameter used elsewhere in the library
 * has exactly one home here.
 */

#ifndef SFA_CONSTANTS_HPP
#define SFA_CONSTANTS_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace sfa {

struct UniversalConstants {
  double hbar = 1.054571817e-34;             // J*s
  double k_B = 1.380649e-23;                 // J/K
  double c_light = 2.99792458e8;             // m/s
  double atomic_mass_unit = 1.66053906660e-27;  // kg
  double lorenz_number = 2.44e-8;            // W*Ohm/K^2
};

inline const UniversalConstants& constants() {
  static const UniversalConstants c;
  return c;
}

/// Bulk superfluid 4He parameters, treated as temperature independent.
struct HeliumProperties {
  double rho4 = 145.0;             // kg/m^3
  double c4 = 238.0;               // m/s, first sound
  double gruneisen_G = 2.84;       // (rho/c) dc/drho
  double gamma_dispersion = -1e48; // (s/(kg*m))^2, dispersion nonlinearity
  double tau_coeff = 0.9e7;        // 1/(s*K^5); thermal phonon lifetime 1/(tau_coeff*T^5)
  double eps_r = 1.0565;           // relative permittivity of liquid 4He
  double m4 = 4.002602 * 1.66053906660e-27;  // kg

  void validate() const {
    if (rho4 <= 0 || c4 <= 0 || gruneisen_G <= 0 || tau_coeff <= 0)
      throw std::invalid_argument("HeliumProperties: parameters must be positive");
    if (gamma_dispersion >= 0)
      throw std::invalid_argument("HeliumProperties: gamma_dispersion must be negative");
    if (eps_r < 1.0)
      throw std::invalid_argument("HeliumProperties: eps_r must be >= 1");
  }
};

/// 3He impurity parameters.
struct He3Properties {
  double sigma = 6e-20;                        // m^2, scattering cross section
  double mass_ratio_effective = 2.34;          // m3*/m3 at zero concentration
  double m3 = 3.0160293 * 1.66053906660e-27;   // kg
  double concentration_x = 1e-6;               // n3/n4 number ratio

  double effective_mass() const { return mass_ratio_effective * m3; }

  void validate() const {
    if (sigma <= 0 || mass_ratio_effective <= 0 || m3 <= 0)
      throw std::invalid_argument("He3Properties: parameters must be positive");
    if (concentration_x < 0 || concentration_x > 1)
      throw std::invalid_argument("He3Properties: concentration_x must lie in [0,1]");
  }
};

/// Registry entry for a solid (or fluid) material.
struct MaterialProperties {
  std::string name;
  double rho = 0;       // kg/m^3
  double c_sound = 0;   // m/s
  std::optional<double> rrr;  // residual resistivity ratio, metals only
  std::optional<double> resistivity_300k;  // Ohm*m, metals only
};

class MaterialRegistry {
 public:
  MaterialRegistry() {
    add({"helium4", 145.0, 238.0, std::nullopt, std::nullopt});
    add({"helium3", 82.0, 0.0, std::nullopt, std::nullopt});
    add({"niobium", 8570.0, 3480.0, std::nullopt, std::nullopt});
    // RRR 90 reproduces the ~1e4 K/W suspension-wire resistance at 40 mK.
    add({"copper", 8960.0, 3810.0, 90.0, 1.68e-8});
  }

  const MaterialProperties& lookup(const std::string& name) const {
    auto it = entries_.find(name);
    if (it == entries_.end())
      throw std::out_of_range("unknown material: " + name);
    return it->second;
  }

  bool contains(const std::string& name) const {
    return entries_.count(name) != 0;
  }

  void override_field(const std::string& name, const std::string& field,
                      double value) {
    auto it = entries_.find(name);
    if (it == entries_.end())
      throw std::out_of_range("unknown material: " + name);
    MaterialProperties& m = it->second;
    if (field == "rho") m.rho = value;
    else if (field == "c_sound") m.c_sound = value;
    else if (field == "rrr") m.rrr = value;
    else if (field == "resistivity_300k") m.resistivity_300k = value;
    else throw std::out_of_range("unknown material field: " + field);
    if (m.rho <= 0)
      throw std::invalid_argument("material density must be positive");
  }

 private:
  void add(MaterialProperties m) { entries_.emplace(m.name, std::move(m)); }
  std::map<std::string, MaterialProperties> entries_;
};

inline const MaterialRegistry& default_materials() {
  static const MaterialRegistry r;
  return r;
}

inline const MaterialProperties& lookup_material(const std::string& name) {
  return default_materials().lookup(name);
}

}  // namespace sfa

#endif  // SFA_CONSTANTS_HPP
