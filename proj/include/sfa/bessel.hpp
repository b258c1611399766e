/**
 * @file bessel.hpp
 * @brief Bessel functions of the first kind and their zeros, by ascending
 *        power series plus Newton refinement. No external special-function
 *        dependency; long double accumulation keeps the series accurate out
 *        to the largest tabulated zero (~21).
 */

#ifndef SFA_BESSEL_HPP
#define SFA_BESSEL_HPP

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace sfa::bessel {

inline constexpr int kMaxOrder = 4;   // m in [0, 4]
inline constexpr int kMaxIndex = 5;   // n in [1, 5]

/// J_m(x) by ascending series, term cutoff 1e-18 relative.
inline double j(int m, double x) {
  if (m < 0) throw std::out_of_range("bessel order must be >= 0");
  const long double half = 0.5L * static_cast<long double>(x);
  long double term = 1.0L;
  for (int i = 1; i <= m; ++i) term *= half / i;
  long double sum = term;
  long double mag = std::fabs(term);
  const long double h2 = half * half;
  for (int k = 1; k < 400; ++k) {
    term *= -h2 / (static_cast<long double>(k) * (k + m));
    sum += term;
    mag = std::max(mag, std::fabs(term));
    if (std::fabs(term) < 1e-18L * std::max(mag, 1.0L)) break;
  }
  return static_cast<double>(sum);
}

/// dJ_m/dx. Uses J'_0 = -J_1 and J'_m = J_{m-1} - (m/x) J_m.
inline double j_prime(int m, double x) {
  if (m == 0) return -j(1, x);
  if (x == 0.0) return m == 1 ? 0.5 : 0.0;
  return j(m - 1, x) - (m / x) * j(m, x);
}

/// d2J_m/dx2 from the Bessel equation.
inline double j_second(int m, double x) {
  return -j_prime(m, x) / x - (1.0 - static_cast<double>(m) * m / (x * x)) * j(m, x);
}

namespace detail {

// Seeds for Newton; ~4 decimal places, m rows 0..4, n columns 1..5.
inline constexpr std::array<std::array<double, 5>, 5> kJPrimeZeroSeed = {{
    {3.8317, 7.0156, 10.1735, 13.3237, 16.4706},
    {1.8412, 5.3314, 8.5363, 11.7060, 14.8636},
    {3.0542, 6.7061, 9.9695, 13.1704, 16.3475},
    {4.2012, 8.0152, 11.3459, 14.5858, 17.7887},
    {5.3176, 9.2824, 12.6819, 15.9641, 19.1960},
}};

inline constexpr std::array<std::array<double, 5>, 5> kJZeroSeed = {{
    {2.4048, 5.5201, 8.6537, 11.7915, 14.9309},
    {3.8317, 7.0156, 10.1735, 13.3237, 16.4706},
    {5.1356, 8.4172, 11.6198, 14.7960, 17.9598},
    {6.3802, 9.7610, 13.0152, 16.2235, 19.4094},
    {7.5883, 11.0647, 14.3725, 17.6160, 20.8269},
}};

inline void check_range(int m, int n) {
  if (m < 0 || m > kMaxOrder)
    throw std::out_of_range("bessel zero order m out of supported range [0,4]");
  if (n < 1 || n > kMaxIndex)
    throw std::out_of_range("bessel zero index n out of supported range [1,5]");
}

template <typename F, typename DF>
inline double newton(double x, F f, DF df) {
  for (int it = 0; it < 60; ++it) {
    const double step = f(x) / df(x);
    x -= step;
    if (std::fabs(step) < 1e-14) break;
  }
  return x;
}

}  // namespace detail

/// n-th positive zero of J'_m (the trivial zero of J'_0 at 0 excluded).
inline double j_prime_zero(int m, int n) {
  detail::check_range(m, n);
  return detail::newton(
      detail::kJPrimeZeroSeed[m][n - 1],
      [m](double x) { return j_prime(m, x); },
      [m](double x) { return j_second(m, x); });
}

/// n-th positive zero of J_m.
inline double j_zero(int m, int n) {
  detail::check_range(m, n);
  return detail::newton(
      detail::kJZeroSeed[m][n - 1],
      [m](double x) { return j(m, x); },
      [m](double x) { return j_prime(m, x); });
}

}  // namespace sfa::bessel

#endif  // SFA_BESSEL_HPP
