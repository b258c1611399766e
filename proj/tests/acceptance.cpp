// Acceptance suite: one line per criterion, nonzero exit if any fail.

#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include "sfa/attenuation.hpp"
#include "sfa/bessel.hpp"
#include "sfa/cavity_modes.hpp"
#include "sfa/microwave.hpp"
#include "sfa/ringdown.hpp"
#include "sfa/thermal.hpp"

namespace {

int failures = 0;

void report(const std::string& name, bool ok, const std::string& detail) {
  std::printf("%s %-28s %s\n", ok ? "PASS" : "FAIL", name.c_str(),
              detail.c_str());
  if (!ok) ++failures;
}

bool in(double v, double lo, double hi) { return v >= lo && v <= hi; }

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

int main() {
  using namespace sfa;
  const double pi = std::numbers::pi;
  const CylinderGeometry cell;
  const MaterialProperties& nb = lookup_material("niobium");

  // 1. Q<->T anchors and inversion
  {
    const double q82 = three_phonon({8111, 0.082}).q;
    const double q44 = three_phonon({8111, 0.044}).q;
    const double t_from_14e6 = temperature_from_q(1.4e7, 8111);
    const double t_from_135e6 = temperature_from_q(1.35e8, 8111);
    const bool ok = in(q82, 1.26e7, 1.54e7) && in(q44, 1.21e8, 1.49e8) &&
                    std::fabs(t_from_14e6 - 0.082) / 0.082 <= 0.05 &&
                    std::fabs(t_from_135e6 - 0.044) / 0.044 <= 0.05;
    report("1-q-temperature-anchors", ok,
           "Q(82mK)=" + num(q82) + " Q(44mK)=" + num(q44) +
               " T(1.4e7)=" + num(t_from_14e6) +
               " T(1.35e8)=" + num(t_from_135e6));
  }

  // 2. Bracket saturation at 40 mK
  {
    const double b = three_phonon({8112, 0.040}).bracket;
    report("2-bracket-saturation", in(b, 0.9 * pi, pi),
           "bracket/pi=" + num(b / pi));
  }

  // 3. Power law slope over [0.1, 0.3] K
  {
    const int n = 50;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int i = 0; i < n; ++i) {
      const double t = 0.1 * std::pow(3.0, static_cast<double>(i) / (n - 1));
      const double x = std::log(t);
      const double y = std::log(three_phonon({8112, t}).alpha);
      sx += x; sy += y; sxx += x * x; sxy += x * y;
    }
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    report("3-t4-power-law", in(slope, 3.8, 4.6), "slope=" + num(slope));
  }

  // 4. Attenuation extremum near 450 mK
  {
    double best_t = 0, best_a = 0;
    for (int i = 0; i <= 4000; ++i) {
      const double t = std::min(0.3 + 1e-4 * i, 0.7);
      const double a = three_phonon({8112, t}).alpha;
      if (a > best_a) { best_a = a; best_t = t; }
    }
    report("4-attenuation-extremum", in(best_t, 0.40, 0.50),
           "argmax_T=" + num(best_t));
  }

  // 5. 3He crossover concentration and mean free path ratio
  {
    const double xc = he3_crossover_concentration(0.036);
    He3Properties dilute;
    dilute.concentration_x = 2e-10;
    const double ratio = he3_mean_free_path(dilute) / 0.036;
    report("5-he3-crossover", in(xc, 1e-8, 3e-8) && in(ratio, 75, 125),
           "x_c=" + num(xc) + " lambda/D=" + num(ratio));
  }

  // 6. 3He hydrodynamic Q magnitude
  {
    He3Properties he3;
    he3.concentration_x = 1e-6;
    const double q = he3_attenuation({8112, 0.044}, he3, 0.036).q;
    report("6-he3-magnitude", in(q, 0.4e8, 2.0e8), "Q_he3=" + num(q));
  }

  // 7. Acoustic and microwave modes
  {
    const double f_acoustic = acoustic_mode_frequency(cell, 238.0, 0, 1, 0);
    const double f_te = te011_frequency(cell, HeliumProperties{}.eps_r);
    const auto nodes = radial_pressure_nodes(cell, 0, 1);
    const bool ok = std::fabs(f_acoustic - 8112) / 8112 <= 0.015 &&
                    std::fabs(f_te - 10.6e9) / 10.6e9 <= 0.02 &&
                    nodes.size() == 1 &&
                    std::fabs(nodes[0] / cell.radius - 0.628) <= 1e-3;
    report("7-mode-frequencies", ok,
           "f_010=" + num(f_acoustic) + " f_TE011=" + num(f_te) +
               " node/R=" + num(nodes[0] / cell.radius));
  }

  // 8. Thermal network
  {
    const double tau40 = thermal_time_constant(0.040, cell, nb);
    const double flat = thermal_time_constant(0.050, cell, nb) /
                        thermal_time_constant(0.150, cell, nb);
    const double q40 = required_heat_leak(0.040, 0.020);
    const double rw = wire_thermal_resistance(0.040);
    const bool ok = in(tau40, 1, 30) && std::fabs(flat - 1) <= 1e-6 &&
                    in(q40, 12.5e-9, 50e-9) && in(rw, 0.5e4, 2e4);
    report("8-thermal-network", ok,
           "tau=" + num(tau40) + "s Qdot40=" + num(q40) + "W R_wire=" + num(rw));
  }

  // 9. Intracavity photon numbers
  {
    const double detuning = 2 * pi * 8112;
    const double n_low = intracavity_photons(0.4e-12, detuning);
    const double n_high = intracavity_photons(4e-9, detuning);
    const bool ok = std::fabs(n_low - 3e4) / 3e4 <= 0.25 &&
                    std::fabs(n_high - 3e8) / 3e8 <= 0.25;
    report("9-pump-photons", ok,
           "n(0.4pW)=" + num(n_low) + " n(4nW)=" + num(n_high));
  }

  // 10. Phase-noise budget
  {
    const double l_cal = phase_noise_requirement(0.014, 1e10);
    const double l_pred = phase_noise_requirement(0.008, 1e11);
    const bool ok =
        std::fabs(l_cal + 143.0) < 1e-9 && std::fabs(l_pred + 136.0) <= 1.5;
    report("10-phase-noise", ok,
           "L(14mK,1e10)=" + num(l_cal) + " L(8mK,1e11)=" + num(l_pred));
  }

  // 11. Ringdown pipeline
  {
    // noise-free full path: carrier synthesis, lock-in envelope, decay fit
    const double f = 8112, q_true = 1.35e8, fs = 20000, bw = 100;
    const auto trace = synthesize(f, q_true, 1.0, fs, 100.0, 0.0, 1);
    auto env = envelope(trace, f, bw);
    // drop the filter transient before fitting
    const auto skip = static_cast<Eigen::Index>(env.sample_rate * 0.05);
    env.start_time += skip / env.sample_rate;
    env.samples = env.samples.tail(env.samples.size() - skip).eval();
    const double q_fit = fit_decay(env, f).q;

    // SNR 100 Monte Carlo over 100 seeds (envelope-mode synthesis)
    const double tau = q_true / (pi * f);
    double sum_q = 0;
    const int n_seeds = 100;
    for (int seed = 0; seed < n_seeds; ++seed) {
      const auto e = synthesize(f, q_true, 1.0, 512.0 / (2 * tau), 2 * tau,
                                0.01, 7000 + seed, SynthesisMode::Envelope);
      sum_q += fit_decay(e, f).q;
    }
    const double bias = std::fabs(sum_q / n_seeds - q_true) / q_true;
    const bool ok = std::fabs(q_fit - q_true) / q_true <= 1e-3 && bias <= 0.005;
    report("11-ringdown-pipeline", ok,
           "q_noise_free=" + num(q_fit) + " mc_bias=" + num(bias));
  }

  // 12. Property suite
  {
    bool mono = true;
    double prev = 0;
    for (int i = 1; i <= 90; ++i) {
      const double a = three_phonon({8112, 0.005 * i}).alpha;
      if (a <= prev) mono = false;
      prev = a;
    }
    He3Properties he3;
    he3.concentration_x = 1e-6;
    const auto comb = combined_q({8112, 0.1}, he3, 0.036);
    const bool harmonic =
        comb.total.q <=
        std::min(comb.mechanisms[0].q, comb.mechanisms[1].q) * (1 + 1e-12);
    bool conversion = true;
    for (double t : {0.02, 0.1, 0.4}) {
      const auto b = three_phonon({8112, t});
      if (std::fabs(b.q * b.alpha - 2 * pi * 8112 / 238.0) > 1e-9) conversion = false;
    }
    bool residuals = true;
    for (int m = 0; m <= 4; ++m)
      for (int n = 1; n <= 5; ++n)
        if (std::fabs(bessel::j_prime(m, bessel::j_prime_zero(m, n))) > 1e-12)
          residuals = false;
    bool roundtrip = true;
    for (double t : {0.02, 0.1, 0.3}) {
      const double back = temperature_from_q(three_phonon({8112, t}).q, 8112);
      if (std::fabs(back - t) / t > 1e-4) roundtrip = false;
    }
    auto capture = [](const char* args) {
      std::string out;
      const std::string cmd = std::string(SFA_CLI_PATH) + " " + args;
      if (FILE* pipe = popen(cmd.c_str(), "r")) {
        char buf[4096];
        while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe))
          out.append(buf, n);
        pclose(pipe);
      }
      return out;
    };
    const std::string sweep_a = capture("qcurve --points 40");
    const std::string sweep_b = capture("qcurve --points 40");
    const bool deterministic = !sweep_a.empty() && sweep_a == sweep_b;
    const bool ok =
        mono && harmonic && conversion && residuals && roundtrip && deterministic;
    report("12-property-suite", ok,
           std::string("mono=") + (mono ? "y" : "n") + " harmonic=" +
               (harmonic ? "y" : "n") + " conversion=" + (conversion ? "y" : "n") +
               " residuals=" + (residuals ? "y" : "n") + " roundtrip=" +
               (roundtrip ? "y" : "n") + " cli_determinism=" +
               (deterministic ? "y" : "n"));
  }

  std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
