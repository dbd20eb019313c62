// ssbath: data generators for the superstatistical bath, thermodynamics,
// two-level atom and AC Stark computations.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>

#include "ssbath/acceptance.hpp"
#include "ssbath/cli.hpp"
#include "ssbath/error.hpp"
#include "ssbath/qme.hpp"

namespace {

using ssbath::cli::CommandResult;
using ssbath::cli::Format;

struct Output {
  std::string path = "-";
  std::string format = "csv";
};

void add_output_flags(CLI::App* cmd, Output& out) {
  cmd->add_option("--output", out.path, "Output file, - for stdout")->capture_default_str();
  cmd->add_option("--format", out.format)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
}

int emit(const CommandResult& r, const Output& out) {
  const std::string text = ssbath::cli::render(r.table, out.format == "json" ? Format::json : Format::csv);
  if (out.path == "-") {
    std::fwrite(text.data(), 1, text.size(), stdout);
    std::fflush(stdout);
  } else {
    std::ofstream f(out.path, std::ios::binary);
    f << text;
    f.close();
    if (!f) {
      std::cerr << "ssbath: cannot write " << out.path << "\n";
      return 2;
    }
  }
  for (const auto& d : r.diagnostics) std::cerr << "ssbath: " << d << "\n";
  if (r.failed_rows > 0) {
    std::cerr << "ssbath: " << r.failed_rows << " of " << r.table.rows.size() << " rows failed\n";
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Superstatistical bath correlations, Tsallis thermodynamics and two-level atom dynamics"};
  app.require_subcommand(1);

  Output out;

  ssbath::cli::CorrelateConfig cc;
  auto* correlate = app.add_subcommand("correlate", "C_q(tau) against the q=1 correlator");
  correlate->add_option("--q", cc.q)->capture_default_str();
  correlate->add_option("--beta-tilde", cc.beta_tilde)->capture_default_str();
  correlate->add_option("--omega-c", cc.omega_c)->capture_default_str();
  correlate->add_option("--alpha", cc.alpha)->capture_default_str();
  correlate->add_option("--tau-max", cc.tau_max)->capture_default_str();
  correlate->add_option("--n-points", cc.n_points)->capture_default_str();
  add_output_flags(correlate, out);

  ssbath::cli::SuPlaneConfig sc;
  auto* su = app.add_subcommand("su-plane", "U and S along a T~ grid with the physical gate");
  su->add_option("--q", sc.q)->capture_default_str();
  su->add_option("--t-tilde-min", sc.t_tilde_min)->capture_default_str();
  su->add_option("--t-tilde-max", sc.t_tilde_max)->capture_default_str();
  su->add_option("--n", sc.n)->capture_default_str();
  add_output_flags(su, out);

  ssbath::cli::TempMapConfig tc;
  auto* tm = app.add_subcommand("temp-map", "Physical temperature T(T~) for several q");
  tm->add_option("--q-list", tc.q_list)->delimiter(',')->capture_default_str();
  tm->add_option("--t-tilde-min", tc.t_tilde_min)->capture_default_str();
  tm->add_option("--t-tilde-max", tc.t_tilde_max)->capture_default_str();
  tm->add_option("--n", tc.n)->capture_default_str();
  add_output_flags(tm, out);

  ssbath::cli::StarkConfig stc;
  double volume = -1.0, t_tilde = -1.0;
  auto* stark = app.add_subcommand("stark", "Thermal AC Stark function F(y) on a log grid");
  stark->add_option("--q", stc.q)->capture_default_str();
  auto* theta_opt = stark->add_option("--theta", stc.theta)->capture_default_str();
  auto* vol_opt = stark->add_option("--volume", volume, "Cavity volume (natural units); needs --t-tilde");
  auto* tt_opt = stark->add_option("--t-tilde", t_tilde, "Temperature T~ used with --volume");
  vol_opt->needs(tt_opt)->excludes(theta_opt);
  tt_opt->needs(vol_opt);
  stark->add_option("--y-min", stc.y_min)->capture_default_str();
  stark->add_option("--y-max", stc.y_max)->capture_default_str();
  stark->add_option("--n", stc.n)->capture_default_str();
  add_output_flags(stark, out);

  ssbath::cli::QmeConfig qc;
  double qme_volume = -1.0, qme_t = -1.0;
  auto* qme = app.add_subcommand("qme", "RK4 trajectory of the damped two-level atom");
  qme->add_option("--q", qc.q)->capture_default_str();
  qme->add_option("--y", qc.y)->capture_default_str();
  auto* qtheta = qme->add_option("--theta", qc.theta)->capture_default_str();
  auto* qvol = qme->add_option("--volume", qme_volume);
  auto* qtt = qme->add_option("--t-tilde", qme_t);
  qvol->needs(qtt)->excludes(qtheta);
  qtt->needs(qvol);
  qme->add_option("--gamma0", qc.gamma0)->capture_default_str();
  qme->add_option("--omega-a", qc.omega_a)->capture_default_str();
  qme->add_option("--t-max", qc.t_max)->capture_default_str();
  qme->add_option("--dt", qc.dt)->capture_default_str();
  qme->add_option("--init", qc.init)
      ->check(CLI::IsMember({"excited", "ground", "superposition"}))
      ->capture_default_str();
  qme->add_option("--sample-every", qc.sample_every)->capture_default_str();
  add_output_flags(qme, out);

  auto* selfcheck = app.add_subcommand("selfcheck", "Run the acceptance suite; exit 0 iff all criteria pass");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;  // --help is a ParseError too
  }

  try {
    if (correlate->parsed()) return emit(ssbath::cli::cmd_correlate(cc), out);
    if (su->parsed()) return emit(ssbath::cli::cmd_su_plane(sc), out);
    if (tm->parsed()) return emit(ssbath::cli::cmd_temp_map(tc), out);
    if (stark->parsed()) {
      if (*vol_opt) stc.theta = ssbath::cavity_theta(volume, t_tilde);
      return emit(ssbath::cli::cmd_stark(stc), out);
    }
    if (qme->parsed()) {
      if (*qvol) qc.theta = ssbath::cavity_theta(qme_volume, qme_t);
      return emit(ssbath::cli::cmd_qme(qc), out);
    }
    if (selfcheck->parsed()) {
      bool all = true;
      for (const auto& r : ssbath::acceptance::run_all(std::cout)) all = all && r.pass;
      return all ? 0 : 1;
    }
  } catch (const ssbath::DomainError& e) {
    std::cerr << "ssbath: " << e.what() << "\n";
    return 1;
  } catch (const ssbath::ConfigError& e) {
    std::cerr << "ssbath: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "ssbath: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
