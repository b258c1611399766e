/**
 * @file config.hpp
 * @brief Run configuration: JSON ingestion with strict key checking,
 *        material-registry overrides, and the numeric output formatting
 *        shared by all emitters (scientific, 9 significant digits,
 *        '.' decimal separator regardless of locale).
 */

#ifndef SFA_CONFIG_HPP
#define SFA_CONFIG_HPP

#include <cstdio>
#include <numbers>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "sfa/constants.hpp"
#include "sfa/geometry.hpp"
#include "sfa/microwave.hpp"
#include "sfa/thermal.hpp"

namespace sfa {

enum class OutputFormat { Csv, Json, Text };

struct RunConfig {
  CylinderGeometry geometry;
  MicrowaveCavity cavity;
  HeliumProperties helium;
  He3Properties he3;
  MaterialRegistry materials;
  WireGeometry wire;
  double heatleak_base_40mk = 0.020;  // K
  double heatleak_base_10mk = 0.006;  // K
  OutputFormat output = OutputFormat::Text;

  ThermalNetwork thermal_network() const {
    WireGeometry w = wire;
    w.material = materials.lookup("copper");
    return ThermalNetwork{geometry, w, materials.lookup("niobium"), helium};
  }
};

/// Scientific notation, 9 significant digits, always '.' separator.
inline std::string format_float(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.8e", v);
  return buf;
}

namespace detail {

inline void require_keys(const nlohmann::json& obj,
                         std::initializer_list<const char*> allowed,
                         const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (const char* k : allowed)
      if (it.key() == k) { ok = true; break; }
    if (!ok)
      throw std::invalid_argument("config: unknown key '" + it.key() +
                                  "' in " + where);
  }
}

template <typename T>
inline void maybe(const nlohmann::json& obj, const char* key, T& out) {
  if (obj.contains(key)) out = obj.at(key).get<T>();
}

}  // namespace detail

inline RunConfig parse_config(const nlohmann::json& j) {
  RunConfig cfg;
  detail::require_keys(j,
                       {"geometry", "cavity", "helium", "he3", "materials",
                        "wire", "bases", "output"},
                       "top level");
  if (j.contains("geometry")) {
    const auto& g = j.at("geometry");
    detail::require_keys(g, {"radius", "length"}, "geometry");
    detail::maybe(g, "radius", cfg.geometry.radius);
    detail::maybe(g, "length", cfg.geometry.length);
    cfg.geometry.validate();
  }
  if (j.contains("cavity")) {
    const auto& c = j.at("cavity");
    detail::require_keys(
        c, {"f_c_hz", "kappa_int_hz", "kappa_in_hz", "kappa_out_hz"}, "cavity");
    auto rad = [](double f) { return 2 * std::numbers::pi * f; };
    double f;
    if (c.contains("f_c_hz")) { f = c.at("f_c_hz"); cfg.cavity.omega_c = rad(f); }
    if (c.contains("kappa_int_hz")) { f = c.at("kappa_int_hz"); cfg.cavity.kappa_int = rad(f); }
    if (c.contains("kappa_in_hz")) { f = c.at("kappa_in_hz"); cfg.cavity.kappa_in = rad(f); }
    if (c.contains("kappa_out_hz")) { f = c.at("kappa_out_hz"); cfg.cavity.kappa_out = rad(f); }
    cfg.cavity.validate();
  }
  if (j.contains("helium")) {
    const auto& h = j.at("helium");
    detail::require_keys(h,
                         {"rho4", "c4", "gruneisen_G", "gamma_dispersion",
                          "tau_coeff", "eps_r"},
                         "helium");
    detail::maybe(h, "rho4", cfg.helium.rho4);
    detail::maybe(h, "c4", cfg.helium.c4);
    detail::maybe(h, "gruneisen_G", cfg.helium.gruneisen_G);
    detail::maybe(h, "gamma_dispersion", cfg.helium.gamma_dispersion);
    detail::maybe(h, "tau_coeff", cfg.helium.tau_coeff);
    detail::maybe(h, "eps_r", cfg.helium.eps_r);
    cfg.helium.validate();
  }
  if (j.contains("he3")) {
    const auto& h = j.at("he3");
    detail::require_keys(
        h, {"sigma", "mass_ratio_effective", "concentration_x"}, "he3");
    detail::maybe(h, "sigma", cfg.he3.sigma);
    detail::maybe(h, "mass_ratio_effective", cfg.he3.mass_ratio_effective);
    detail::maybe(h, "concentration_x", cfg.he3.concentration_x);
    cfg.he3.validate();
  }
  if (j.contains("materials")) {
    for (auto it = j.at("materials").begin(); it != j.at("materials").end(); ++it) {
      for (auto f = it.value().begin(); f != it.value().end(); ++f)
        cfg.materials.override_field(it.key(), f.key(), f.value().get<double>());
    }
  }
  if (j.contains("wire")) {
    const auto& w = j.at("wire");
    detail::require_keys(w, {"diameter", "length"}, "wire");
    detail::maybe(w, "diameter", cfg.wire.diameter);
    detail::maybe(w, "length", cfg.wire.length);
    cfg.wire.validate();
  }
  if (j.contains("bases")) {
    const auto& b = j.at("bases");
    detail::require_keys(b, {"heatleak_base_40mk", "heatleak_base_10mk"}, "bases");
    detail::maybe(b, "heatleak_base_40mk", cfg.heatleak_base_40mk);
    detail::maybe(b, "heatleak_base_10mk", cfg.heatleak_base_10mk);
  }
  if (j.contains("output")) {
    const std::string s = j.at("output");
    if (s == "csv") cfg.output = OutputFormat::Csv;
    else if (s == "json") cfg.output = OutputFormat::Json;
    else if (s == "text") cfg.output = OutputFormat::Text;
    else throw std::invalid_argument("config: unknown output format '" + s + "'");
  }
  return cfg;
}

inline nlohmann::json dump_config(const RunConfig& cfg) {
  nlohmann::json j;
  j["geometry"] = {{"radius", cfg.geometry.radius},
                   {"length", cfg.geometry.length}};
  auto hz = [](double w) { return w / (2 * std::numbers::pi); };
  j["cavity"] = {{"f_c_hz", hz(cfg.cavity.omega_c)},
                 {"kappa_int_hz", hz(cfg.cavity.kappa_int)},
                 {"kappa_in_hz", hz(cfg.cavity.kappa_in)},
                 {"kappa_out_hz", hz(cfg.cavity.kappa_out)}};
  j["helium"] = {{"rho4", cfg.helium.rho4},
                 {"c4", cfg.helium.c4},
                 {"gruneisen_G", cfg.helium.gruneisen_G},
                 {"gamma_dispersion", cfg.helium.gamma_dispersion},
                 {"tau_coeff", cfg.helium.tau_coeff},
                 {"eps_r", cfg.helium.eps_r}};
  j["he3"] = {{"sigma", cfg.he3.sigma},
              {"mass_ratio_effective", cfg.he3.mass_ratio_effective},
              {"concentration_x", cfg.he3.concentration_x}};
  const auto& cu = cfg.materials.lookup("copper");
  const auto& nb = cfg.materials.lookup("niobium");
  j["materials"] = {
      {"copper",
       {{"rho", cu.rho}, {"c_sound", cu.c_sound}, {"rrr", cu.rrr.value_or(0)},
        {"resistivity_300k", cu.resistivity_300k.value_or(0)}}},
      {"niobium", {{"rho", nb.rho}, {"c_sound", nb.c_sound}}}};
  j["wire"] = {{"diameter", cfg.wire.diameter}, {"length", cfg.wire.length}};
  j["bases"] = {{"heatleak_base_40mk", cfg.heatleak_base_40mk},
                {"heatleak_base_10mk", cfg.heatleak_base_10mk}};
  j["output"] = cfg.output == OutputFormat::Csv    ? "csv"
                : cfg.output == OutputFormat::Json ? "json"
                                                   : "text";
  return j;
}

}  // namespace sfa

#endif  // SFA_CONFIG_HPP
