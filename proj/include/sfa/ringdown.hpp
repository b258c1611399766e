/**
 * @file ringdown.hpp
 * @brief Free-decay Q measurement in software: synthetic ringdown traces,
 *        lock-in style envelope extraction, and weighted log-linear decay
 *        fitting. Q = pi * f * tau_amp throughout (amplitude 1/e time).
 */

#ifndef SFA_RINGDOWN_HPP
#define SFA_RINGDOWN_HPP

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <stdexcept>

namespace sfa {

struct RingdownTrace {
  double sample_rate = 0;  // Hz
  Eigen::ArrayXd samples;  // arbitrary units
  double start_time = 0;   // s

  Eigen::ArrayXd times() const {
    return start_time +
           Eigen::ArrayXd::LinSpaced(samples.size(), 0,
                                     (samples.size() - 1) / sample_rate);
  }
};

struct DecayFit {
  double tau_amp = 0;       // s, amplitude 1/e time
  double q = 0;             // pi * f * tau_amp
  double amplitude0 = 0;    // extrapolated to t = 0
  double sigma_tau = 0;     // s, standard error from residuals
  double rms_residual = 0;  // a.u.
};

struct FitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class SynthesisMode { Carrier, Envelope };

/// Synthesize a decaying ringdown, a0 e^{-t/tau} sin(2 pi f t) plus seeded
/// gaussian noise; tau = q/(pi f). Envelope mode emits the bare decaying
/// amplitude instead, for long decays where carrier-rate sampling is
/// pointless.
inline RingdownTrace synthesize(double f_hz, double q, double a0,
                                double sample_rate, double duration,
                                double noise_rms, std::uint64_t seed,
                                SynthesisMode mode = SynthesisMode::Carrier) {
  if (f_hz <= 0 || q <= 0 || duration <= 0 || sample_rate <= 0)
    throw std::domain_error("synthesize: f, q, fs, duration must be positive");
  if (mode == SynthesisMode::Carrier && sample_rate <= 2 * f_hz)
    throw std::invalid_argument(
        "synthesize: carrier mode needs sample_rate > 2f (use envelope mode)");
  const double tau = q / (std::numbers::pi * f_hz);
  const auto n = static_cast<Eigen::Index>(duration * sample_rate);
  if (n < 16)
    throw std::invalid_argument("synthesize: trace would have fewer than 16 samples");
  RingdownTrace trace;
  trace.sample_rate = sample_rate;
  trace.samples.resize(n);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> noise(0.0, noise_rms);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double t = i / sample_rate;
    double s = a0 * std::exp(-t / tau);
    if (mode == SynthesisMode::Carrier)
      s *= std::sin(2 * std::numbers::pi * f_hz * t);
    trace.samples[i] = s + (noise_rms > 0 ? noise(rng) : 0.0);
  }
  return trace;
}

/// Quadrature demodulation at f_ref with a single-pole low pass at
/// `bandwidth`, magnitude output decimated to >= 8 samples per filter time
/// constant.
inline RingdownTrace envelope(const RingdownTrace& trace, double f_ref,
                              double bandwidth) {
  if (trace.sample_rate <= 0 || trace.samples.size() < 16)
    throw std::invalid_argument("envelope: need a sampled trace of >= 16 points");
  if (!(bandwidth > 0) || bandwidth >= f_ref / 4)
    throw std::invalid_argument("envelope: require 0 < bandwidth < f_ref/4");
  if (trace.sample_rate <= 2 * f_ref)
    throw std::invalid_argument("envelope: trace undersamples f_ref");
  const double dt = 1.0 / trace.sample_rate;
  const double a = 1.0 - std::exp(-2 * std::numbers::pi * bandwidth * dt);
  const double tau_filter = 1.0 / (2 * std::numbers::pi * bandwidth);
  const auto step = std::max<Eigen::Index>(
      1, static_cast<Eigen::Index>(trace.sample_rate * tau_filter / 8));
  RingdownTrace out;
  out.sample_rate = trace.sample_rate / static_cast<double>(step);
  out.start_time = trace.start_time;
  out.samples.resize((trace.samples.size() + step - 1) / step);
  double li = 0, lq = 0;
  Eigen::Index k = 0;
  for (Eigen::Index i = 0; i < trace.samples.size(); ++i) {
    const double t = i * dt;  // demodulation phase is relative to trace start
    const double s = trace.samples[i];
    li += a * (s * std::sin(2 * std::numbers::pi * f_ref * t) - li);
    lq += a * (s * std::cos(2 * std::numbers::pi * f_ref * t) - lq);
    if (i % step == 0) out.samples[k++] = 2 * std::hypot(li, lq);
  }
  out.samples.conservativeResize(k);
  return out;
}

/// Weighted least squares on ln(amplitude) vs t. Weights proportional to
/// amplitude^2 undo the log-transform bias. The fit window ends at the
/// first non-positive sample.
inline DecayFit fit_decay(const RingdownTrace& env, double f_mode_hz) {
  if (f_mode_hz <= 0)
    throw std::domain_error("fit_decay: mode frequency must be positive");
  if (env.sample_rate <= 0 || env.samples.size() < 2)
    throw FitError("fit_decay: need at least 2 samples");
  Eigen::Index n_valid = 0;
  while (n_valid < env.samples.size() && env.samples[n_valid] > 0) ++n_valid;
  if (n_valid == 0) throw FitError("fit_decay: envelope non-positive from sample 0");
  if (n_valid < 2) throw FitError("fit_decay: too few valid points");

  Eigen::Matrix2d ata = Eigen::Matrix2d::Zero();
  Eigen::Vector2d atb = Eigen::Vector2d::Zero();
  for (Eigen::Index i = 0; i < n_valid; ++i) {
    const double t = env.start_time + i / env.sample_rate;
    const double w = env.samples[i] * env.samples[i];
    const double y = std::log(env.samples[i]);
    const Eigen::Vector2d row(1.0, t);
    ata += w * row * row.transpose();
    atb += w * y * row;
  }
  const Eigen::Vector2d coef = ata.ldlt().solve(atb);
  const double slope = coef[1];
  if (!(slope < 0)) throw FitError("fit_decay: envelope is not decaying");

  DecayFit fit;
  fit.tau_amp = -1.0 / slope;
  fit.q = std::numbers::pi * f_mode_hz * fit.tau_amp;
  fit.amplitude0 = std::exp(coef[0]);

  // residual-based parameter uncertainty
  double chi2 = 0, wsum = 0, rss = 0;
  for (Eigen::Index i = 0; i < n_valid; ++i) {
    const double t = env.start_time + i / env.sample_rate;
    const double w = env.samples[i] * env.samples[i];
    const double r = std::log(env.samples[i]) - (coef[0] + coef[1] * t);
    chi2 += w * r * r;
    wsum += w;
    const double pred = fit.amplitude0 * std::exp(-t / fit.tau_amp);
    rss += (env.samples[i] - pred) * (env.samples[i] - pred);
  }
  fit.rms_residual = std::sqrt(rss / n_valid);
  if (n_valid > 2) {
    const double s2 = chi2 / (n_valid - 2);
    const Eigen::Matrix2d cov = s2 * ata.inverse();
    const double sigma_slope = std::sqrt(std::max(0.0, cov(1, 1)));
    fit.sigma_tau = sigma_slope / (slope * slope);
  }
  return fit;
}

}  // namespace sfa

#endif  // SFA_RINGDOWN_HPP
