/**
 * @file cavity_modes.hpp
 * @brief Analytic eigenmodes of the rigid cylindrical cell: acoustic
 *        pressure modes with Neumann walls (pressure antinode at the
 *        boundary) and the TE011 microwave mode of the same cylinder
 *        filled with helium dielectric.
 */

#ifndef SFA_CAVITY_MODES_HPP
#define SFA_CAVITY_MODES_HPP

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "sfa/bessel.hpp"
#include "sfa/constants.hpp"
#include "sfa/geometry.hpp"

namespace sfa {

struct AcousticMode {
  int m = 0;  // azimuthal
  int n = 1;  // radial; 0 means the trivial root (pure longitudinal)
  int l = 0;  // longitudinal
  double frequency_hz = 0;
  std::vector<double> radial_node_radii;  // m, strictly increasing
};

/// Eigenfrequency of the (m,n,l) acoustic pressure mode. n=0 selects the
/// trivial radial root, giving the pure longitudinal f = c*l/(2L).
inline double acoustic_mode_frequency(const CylinderGeometry& geom,
                                      double sound_speed, int m, int n, int l) {
  geom.validate();
  if (sound_speed <= 0)
    throw std::domain_error("acoustic_mode_frequency: sound speed must be positive");
  if (l < 0) throw std::out_of_range("longitudinal index l must be >= 0");
  double radial_term = 0;
  if (n == 0) {
    if (m != 0)
      throw std::out_of_range("trivial radial root requires m = 0");
    if (l == 0)
      throw std::domain_error("(0,0,0) has zero total wavenumber");
  } else {
    radial_term = bessel::j_prime_zero(m, n) / geom.radius;
  }
  const double axial_term = std::numbers::pi * l / geom.length;
  return sound_speed / (2 * std::numbers::pi) *
         std::hypot(radial_term, axial_term);
}

/// Radii inside (0, R) where the (m,n) radial pressure profile crosses zero:
/// J_m(j'_{m,n} r / R) = 0.
inline std::vector<double> radial_pressure_nodes(const CylinderGeometry& geom,
                                                 int m, int n) {
  geom.validate();
  const double jp = bessel::j_prime_zero(m, n);
  std::vector<double> nodes;
  for (int k = 1; k <= bessel::kMaxIndex; ++k) {
    const double jz = bessel::j_zero(m, k);
    if (jz >= jp) break;
    nodes.push_back(geom.radius * jz / jp);
  }
  return nodes;
}

/// All supported-index modes with f <= f_max, ascending in frequency.
inline std::vector<AcousticMode> acoustic_mode_table(
    const CylinderGeometry& geom, double sound_speed, double f_max) {
  if (f_max <= 0)
    throw std::domain_error("acoustic_mode_table: f_max must be positive");
  geom.validate();
  std::vector<AcousticMode> modes;
  const int l_max = static_cast<int>(
      std::floor(2 * geom.length * f_max / sound_speed));
  // pure longitudinal
  for (int l = 1; l <= l_max; ++l) {
    const double f = acoustic_mode_frequency(geom, sound_speed, 0, 0, l);
    if (f <= f_max) modes.push_back({0, 0, l, f, {}});
  }
  for (int m = 0; m <= bessel::kMaxOrder; ++m) {
    for (int n = 1; n <= bessel::kMaxIndex; ++n) {
      for (int l = 0; l <= l_max; ++l) {
        const double f = acoustic_mode_frequency(geom, sound_speed, m, n, l);
        if (f <= f_max)
          modes.push_back({m, n, l, f, radial_pressure_nodes(geom, m, n)});
      }
    }
  }
  std::sort(modes.begin(), modes.end(),
            [](const AcousticMode& a, const AcousticMode& b) {
              return a.frequency_hz < b.frequency_hz;
            });
  return modes;
}

/// TE011 microwave resonance of the helium-filled cylinder.
inline double te011_frequency(const CylinderGeometry& geom, double eps_r) {
  geom.validate();
  if (eps_r < 1)
    throw std::domain_error("te011_frequency: eps_r must be >= 1");
  const double jp = bessel::j_prime_zero(0, 1);
  return constants().c_light / (2 * std::numbers::pi * std::sqrt(eps_r)) *
         std::hypot(jp / geom.radius, std::numbers::pi / geom.length);
}

}  // namespace sfa

#endif  // SFA_CAVITY_MODES_HPP
