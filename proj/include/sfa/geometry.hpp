#ifndef SFA_GEOMETRY_HPP
#define SFA_GEOMETRY_HPP

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sfa {

/// Right circular cylinder cell. Defaults: 3.6 cm diameter, 4 cm length.
struct CylinderGeometry {
  double radius = 0.018;  // m
  double length = 0.040;  // m

  void validate() const {
    if (radius <= 0 || length <= 0)
      throw std::invalid_argument("CylinderGeometry: radius and length must be positive");
  }

  /// Wetted area: wall plus both end caps.
  double area() const {
    return 2 * std::numbers::pi * radius * (length + radius);
  }
  double volume() const {
    return std::numbers::pi * radius * radius * length;
  }
  /// Container dimension used for the 3He mean-free-path crossover.
  double diameter() const { return 2 * radius; }
};

}  // namespace sfa

#endif  // SFA_GEOMETRY_HPP
