// Command-line front end: parameter sweeps, single-point evaluations and
// file I/O over the resonator model. See README for the subcommand grammar.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "sfa/attenuation.hpp"
#include "sfa/cavity_modes.hpp"
#include "sfa/config.hpp"
#include "sfa/microwave.hpp"
#include "sfa/ringdown.hpp"
#include "sfa/thermal.hpp"

namespace {

constexpr int kExitBadInput = 2;
constexpr int kExitNoConvergence = 3;
constexpr int kExitIo = 4;

struct Options {
  std::string config_path;
  std::string out_path;
};

sfa::RunConfig load_config(const Options& opt) {
  if (opt.config_path.empty()) return {};
  std::ifstream in(opt.config_path);
  if (!in) throw std::ios_base::failure("cannot open config: " + opt.config_path);
  nlohmann::json j;
  in >> j;
  return sfa::parse_config(j);
}

void emit(const Options& opt, const std::string& text) {
  if (opt.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opt.out_path);
  if (!out) throw std::ios_base::failure("cannot open output: " + opt.out_path);
  out << text;
  if (!out) throw std::ios_base::failure("write failed: " + opt.out_path);
}

std::string qcurve_csv(const sfa::RunConfig& cfg, double freq, double tmin,
                       double tmax, int points, double x3) {
  sfa::He3Properties he3 = cfg.he3;
  he3.concentration_x = x3;
  const double d = cfg.geometry.diameter();
  std::ostringstream os;
  os << "T_K,alpha_3pp,alpha_he3,Q_3pp,Q_he3,Q_total,validity\n";
  for (int i = 0; i < points; ++i) {
    const double u = points == 1 ? 0.0 : static_cast<double>(i) / (points - 1);
    const double t =
        std::min(tmin * std::pow(tmax / tmin, u), tmax);  // log-spaced sweep
    const sfa::ModePoint pt{freq, t};
    const auto combined = sfa::combined_q(pt, he3, d, cfg.helium);
    const auto& pp = combined.mechanisms[0];
    const auto& h3 = combined.mechanisms[1];
    os << sfa::format_float(t) << ',' << sfa::format_float(pp.alpha) << ','
       << sfa::format_float(h3.alpha) << ',' << sfa::format_float(pp.q) << ','
       << sfa::format_float(h3.q) << ',' << sfa::format_float(combined.total.q)
       << ',' << (pt.validity_warning() ? "warn" : "ok") << '\n';
  }
  return os.str();
}

std::string modes_csv(const sfa::RunConfig& cfg, double fmax) {
  const auto table =
      sfa::acoustic_mode_table(cfg.geometry, cfg.helium.c4, fmax);
  std::ostringstream os;
  os << "m,n,l,frequency_hz,node_radii_m\n";
  for (const auto& mode : table) {
    os << mode.m << ',' << mode.n << ',' << mode.l << ','
       << sfa::format_float(mode.frequency_hz) << ',';
    for (std::size_t i = 0; i < mode.radial_node_radii.size(); ++i) {
      if (i) os << ';';
      os << sfa::format_float(mode.radial_node_radii[i]);
    }
    os << '\n';
  }
  return os.str();
}

std::string thermal_text(const sfa::RunConfig& cfg, double t_helium) {
  const auto net = cfg.thermal_network();
  const auto rep = sfa::thermal_report(t_helium, cfg.heatleak_base_40mk, net);
  std::ostringstream os;
  os << "T_helium_K " << sfa::format_float(rep.t_helium) << '\n'
     << "R_kapitza_K_per_W " << sfa::format_float(rep.r_kapitza) << '\n'
     << "R_wire_K_per_W " << sfa::format_float(rep.r_wire) << '\n'
     << "heat_capacity_J_per_K " << sfa::format_float(rep.heat_capacity) << '\n'
     << "time_constant_s " << sfa::format_float(rep.time_constant) << '\n';
  os << "heat_leak_40mK_W "
     << sfa::format_float(
            sfa::required_heat_leak(0.040, cfg.heatleak_base_40mk, net))
     << '\n';
  os << "heat_leak_10mK_W "
     << sfa::format_float(
            sfa::required_heat_leak(0.010, cfg.heatleak_base_10mk, net))
     << '\n';
  return os.str();
}

std::string trace_csv(const sfa::RingdownTrace& trace) {
  std::ostringstream os;
  os << "time_s,amplitude\n";
  for (Eigen::Index i = 0; i < trace.samples.size(); ++i) {
    const double t = trace.start_time + i / trace.sample_rate;
    os << sfa::format_float(t) << ',' << sfa::format_float(trace.samples[i])
       << '\n';
  }
  return os.str();
}

sfa::RingdownTrace read_trace_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open trace: " + path);
  std::string line;
  if (!std::getline(in, line) || line.rfind("time_s,amplitude", 0) != 0)
    throw std::invalid_argument("trace file missing 'time_s,amplitude' header");
  std::vector<double> t, a;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("malformed trace row: " + line);
    t.push_back(std::stod(line.substr(0, comma)));
    a.push_back(std::stod(line.substr(comma + 1)));
  }
  if (t.size() < 2) throw std::invalid_argument("trace too short");
  sfa::RingdownTrace trace;
  trace.start_time = t.front();
  trace.sample_rate = (t.size() - 1) / (t.back() - t.front());
  trace.samples = Eigen::Map<Eigen::ArrayXd>(a.data(), a.size());
  return trace;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Superfluid helium acoustic resonator model"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--config", opt.config_path, "JSON config file");
  app.add_option("--out", opt.out_path, "output file (default: stdout)");

  // qcurve
  auto* qc = app.add_subcommand("qcurve", "Q vs temperature sweep (CSV)");
  double qc_freq = 8112, qc_tmin = 0.04, qc_tmax = 0.7, qc_x3 = 1e-6;
  int qc_points = 200;
  qc->add_option("--freq", qc_freq, "acoustic mode frequency, Hz");
  qc->add_option("--tmin", qc_tmin, "sweep start, K");
  qc->add_option("--tmax", qc_tmax, "sweep end, K");
  qc->add_option("--points", qc_points, "sweep points (log-spaced)");
  qc->add_option("--x3", qc_x3, "3He concentration n3/n4");

  auto* iq = app.add_subcommand("invert-q", "temperature from 3PP-limited Q");
  double iq_q = 0, iq_freq = 8112;
  iq->add_option("--q", iq_q, "measured quality factor")->required();
  iq->add_option("--freq", iq_freq, "mode frequency, Hz");

  auto* md = app.add_subcommand("modes", "acoustic eigenmode table (CSV)");
  double md_fmax = 20000;
  md->add_option("--fmax", md_fmax, "highest frequency, Hz");

  auto* nd = app.add_subcommand("nodes", "radial pressure node radii");
  int nd_m = 0, nd_n = 1;
  nd->add_option("--m", nd_m, "azimuthal index");
  nd->add_option("--n", nd_n, "radial index");

  auto* te = app.add_subcommand("te011", "TE011 microwave frequency");
  double te_eps = -1;
  te->add_option("--eps", te_eps, "relative permittivity (default: config helium)");

  auto* th = app.add_subcommand("thermal", "thermal network report");
  double th_t = 0.040;
  th->add_option("--t", th_t, "helium temperature, K");

  auto* ph = app.add_subcommand("photons", "intracavity pump photon number");
  double ph_power = 0.4e-12, ph_offset = 8112;
  ph->add_option("--power-w", ph_power, "incident power, W");
  ph->add_option("--offset-hz", ph_offset, "pump detuning from cavity, Hz");

  auto* nb = app.add_subcommand("noise-budget", "allowed pump phase noise");
  double nb_t = 0.014, nb_qm = 1e10;
  nb->add_option("--t", nb_t, "helium temperature, K");
  nb->add_option("--qm", nb_qm, "mechanical quality factor");

  auto* rd = app.add_subcommand("ringdown", "ringdown synthesis and fitting");
  rd->require_subcommand(1);
  auto* rs = rd->add_subcommand("simulate", "synthesize a decay trace (CSV)");
  double rs_freq = 8112, rs_q = 1.35e8, rs_a0 = 1.0, rs_fs = 1.0,
         rs_dur = 10000, rs_noise = 0;
  std::uint64_t rs_seed = 1;
  bool rs_carrier = false;
  rs->add_option("--freq", rs_freq, "mode frequency, Hz");
  rs->add_option("--q", rs_q, "quality factor");
  rs->add_option("--a0", rs_a0, "initial amplitude");
  rs->add_option("--fs", rs_fs, "sample rate, Hz");
  rs->add_option("--duration", rs_dur, "trace duration, s");
  rs->add_option("--noise", rs_noise, "gaussian noise rms");
  rs->add_option("--seed", rs_seed, "noise seed");
  rs->add_flag("--carrier", rs_carrier, "sample the carrier (default: envelope)");
  auto* rf = rd->add_subcommand("fit", "fit a decay trace");
  std::string rf_in;
  double rf_freq = 8112, rf_demod = 0, rf_bw = 0;
  rf->add_option("--in", rf_in, "trace CSV (time_s,amplitude)")->required();
  rf->add_option("--freq", rf_freq, "mode frequency, Hz");
  rf->add_option("--demod", rf_demod, "demodulate carrier trace at this frequency, Hz");
  rf->add_option("--bandwidth", rf_bw, "demodulation low-pass bandwidth, Hz");

  auto* cf = app.add_subcommand("config", "configuration utilities");
  cf->require_subcommand(1);
  cf->add_subcommand("dump", "print the effective configuration as JSON");

  CLI11_PARSE(app, argc, argv);

  try {
    const sfa::RunConfig cfg = load_config(opt);

    if (qc->parsed()) {
      emit(opt, qcurve_csv(cfg, qc_freq, qc_tmin, qc_tmax, qc_points, qc_x3));
    } else if (iq->parsed()) {
      const double t = sfa::temperature_from_q(iq_q, iq_freq, cfg.helium);
      emit(opt, "T_K " + sfa::format_float(t) + "\n");
    } else if (md->parsed()) {
      emit(opt, modes_csv(cfg, md_fmax));
    } else if (nd->parsed()) {
      const auto radii = sfa::radial_pressure_nodes(cfg.geometry, nd_m, nd_n);
      std::ostringstream os;
      os << "node_radius_m\n";
      for (double r : radii) os << sfa::format_float(r) << '\n';
      emit(opt, os.str());
    } else if (te->parsed()) {
      const double eps = te_eps > 0 ? te_eps : cfg.helium.eps_r;
      emit(opt, "f_hz " +
                    sfa::format_float(sfa::te011_frequency(cfg.geometry, eps)) +
                    "\n");
    } else if (th->parsed()) {
      emit(opt, thermal_text(cfg, th_t));
    } else if (ph->parsed()) {
      const double n = sfa::intracavity_photons(
          ph_power, 2 * std::numbers::pi * ph_offset, cfg.cavity);
      emit(opt, "photons " + sfa::format_float(n) + "\n");
    } else if (nb->parsed()) {
      const double l = sfa::phase_noise_requirement(nb_t, nb_qm);
      emit(opt, "phase_noise_dbc_hz " + sfa::format_float(l) + "\n");
    } else if (rs->parsed()) {
      const auto trace = sfa::synthesize(
          rs_freq, rs_q, rs_a0, rs_fs, rs_dur, rs_noise, rs_seed,
          rs_carrier ? sfa::SynthesisMode::Carrier : sfa::SynthesisMode::Envelope);
      emit(opt, trace_csv(trace));
    } else if (rf->parsed()) {
      sfa::RingdownTrace trace = read_trace_csv(rf_in);
      if (rf_demod > 0) {
        if (!(rf_bw > 0))
          throw std::invalid_argument("--demod requires --bandwidth");
        trace = sfa::envelope(trace, rf_demod, rf_bw);
        // drop the lock-in settling transient (5 filter time constants)
        const auto skip = std::min<Eigen::Index>(
            trace.samples.size() - 2,
            static_cast<Eigen::Index>(
                std::ceil(trace.sample_rate * 5 /
                          (2 * std::numbers::pi * rf_bw))));
        if (skip > 0) {
          trace.start_time += skip / trace.sample_rate;
          trace.samples =
              trace.samples.tail(trace.samples.size() - skip).eval();
        }
      }
      const auto fit = sfa::fit_decay(trace, rf_freq);
      std::ostringstream os;
      os << "tau_s " << sfa::format_float(fit.tau_amp) << '\n'
         << "q " << sfa::format_float(fit.q) << '\n'
         << "amplitude0 " << sfa::format_float(fit.amplitude0) << '\n'
         << "sigma_tau_s " << sfa::format_float(fit.sigma_tau) << '\n'
         << "rms_residual " << sfa::format_float(fit.rms_residual) << '\n';
      emit(opt, os.str());
    } else if (cf->parsed()) {
      emit(opt, sfa::dump_config(cfg).dump(2) + "\n");
    }
  } catch (const sfa::ConvergenceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNoConvergence;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadInput;
  }
  return 0;
}
