#include "ssbath/cli.hpp"

#include <cmath>
#include <cstdio>
#include <json.hpp>

#include "ssbath/bath.hpp"
#include "ssbath/error.hpp"
#include "ssbath/qme.hpp"
#include "ssbath/stark.hpp"
#include "ssbath/superstat.hpp"
#include "ssbath/thermo.hpp"

namespace ssbath::cli {

namespace {

std::string number(double v, bool integral) {
  char buf[64];
  if (integral) {
    std::snprintf(buf, sizeof buf, "%lld", static_cast<long long>(std::llround(v)));
  } else {
    std::snprintf(buf, sizeof buf, "%.16e", v);
  }
  return buf;
}

bool is_integral(const Table& t, std::size_t c) { return c < t.integral.size() && t.integral[c]; }

std::optional<double> ratio(double num, double den) {
  if (den == 0.0) return num == 0.0 ? std::optional<double>(1.0) : std::nullopt;
  return num / den;
}

}  // namespace

std::string render(const Table& t, Format f) {
  if (f == Format::json) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
      nlohmann::ordered_json obj = nlohmann::ordered_json::object();
      for (std::size_t c = 0; c < t.columns.size(); ++c) {
        if (!row[c]) {
          obj[t.columns[c]] = nullptr;
        } else if (is_integral(t, c)) {
          obj[t.columns[c]] = std::llround(*row[c]);
        } else {
          obj[t.columns[c]] = *row[c];
        }
      }
      arr.push_back(std::move(obj));
    }
    return arr.dump(2) + "\n";
  }
  std::string out;
  for (std::size_t c = 0; c < t.columns.size(); ++c) {
    if (c) out += ',';
    out += t.columns[c];
  }
  out += '\n';
  for (const auto& row : t.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      if (row[c]) out += number(*row[c], is_integral(t, c));
    }
    out += '\n';
  }
  return out;
}

std::vector<double> log_grid(double lo, double hi, int n) {
  if (n < 2 || !(lo > 0.0) || !(hi > lo)) throw ConfigError("log_grid: need n >= 2 and 0 < lo < hi");
  std::vector<double> g(n);
  const double step = std::log(hi / lo) / (n - 1);
  for (int i = 0; i < n; ++i) g[i] = lo * std::exp(step * i);
  g.front() = lo;
  g.back() = hi;
  return g;
}

std::vector<double> lin_grid(double lo, double hi, int n) {
  if (n < 2 || !(hi > lo)) throw ConfigError("lin_grid: need n >= 2 and lo < hi");
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i) g[i] = lo + (hi - lo) * i / (n - 1);
  g.back() = hi;
  return g;
}

CommandResult cmd_correlate(const CorrelateConfig& c) {
  if (c.n_points < 2) throw ConfigError("correlate: n_points must be >= 2");
  if (!(c.tau_max > 0.0)) throw ConfigError("correlate: tau_max must be > 0");
  const BathParams p(c.alpha, c.omega_c, c.beta_tilde, c.q);
  const auto taus = lin_grid(0.0, c.tau_max, c.n_points);

  CommandResult r;
  r.table.columns = {"tau", "re_cq", "im_cq", "re_ceq", "im_ceq", "re_ratio", "im_ratio"};
  try {
    for (const auto& s : correlation_sweep(taus, p)) {
      r.table.rows.push_back({s.tau, s.c_q.real(), s.c_q.imag(), s.c_eq.real(), s.c_eq.imag(),
                              ratio(s.c_q.real(), s.c_eq.real()), ratio(s.c_q.imag(), s.c_eq.imag())});
    }
  } catch (const ValidityError& e) {
    // D does not depend on tau, so every row fails together.
    r.table.rows.clear();
    for (double tau : taus) {
      const Complex ceq = i_integral(1, 0, tau, p);
      r.table.rows.push_back({tau, std::nullopt, std::nullopt, ceq.real(), ceq.imag(), std::nullopt, std::nullopt});
    }
    r.failed_rows = c.n_points;
    r.diagnostics.push_back(e.what());
  }
  return r;
}

CommandResult cmd_su_plane(const SuPlaneConfig& c) {
  auto t = log_grid(c.t_tilde_min, c.t_tilde_max, c.n);
  std::vector<double> betas(t.rbegin(), t.rend());
  for (auto& b : betas) b = 1.0 / b;
  const auto pts = su_plane(c.q, betas);

  CommandResult r;
  r.table.columns = {"t_tilde", "beta_tilde", "u", "s", "trace_rho_q", "beta_physical", "physical"};
  r.table.integral = {false, false, false, false, false, false, true};
  for (std::size_t i = 0; i < t.size(); ++i) {
    const auto& pt = pts[pts.size() - 1 - i];
    r.table.rows.push_back({t[i], pt.beta_tilde, pt.u, pt.s, pt.trace_rho_q, pt.beta_physical,
                            pt.physical ? 1.0 : 0.0});
  }
  return r;
}

CommandResult cmd_temp_map(const TempMapConfig& c) {
  if (c.q_list.empty()) throw ConfigError("temp-map: q list is empty");
  const auto grid = log_grid(c.t_tilde_min, c.t_tilde_max, c.n);
  CommandResult r;
  r.table.columns = {"q", "t_tilde", "t_physical"};
  for (double q : c.q_list) {
    for (const auto& e : temp_map(q, grid)) r.table.rows.push_back({q, e.t_tilde, e.t_physical});
  }
  return r;
}

CommandResult cmd_stark(const StarkConfig& c) {
  const auto ys = log_grid(c.y_min, c.y_max, c.n);
  CommandResult r;
  r.table.columns = {"y", "f"};
  for (double y : ys) {
    try {
      r.table.rows.push_back({y, stark_f({y, c.theta, c.q, 1.0})});
    } catch (const NumericError& e) {
      r.table.rows.push_back({y, std::nullopt});
      ++r.failed_rows;
      r.diagnostics.push_back(e.what());
    }
  }
  return r;
}

CommandResult cmd_qme(const QmeConfig& c) {
  DensityMatrix2 rho0;
  if (c.init == "excited") {
    rho0 = {1.0, 0.0, 0.0};
  } else if (c.init == "ground") {
    rho0 = {0.0, 1.0, 0.0};
  } else if (c.init == "superposition") {
    rho0 = {0.5, 0.5, 0.5};
  } else {
    throw ConfigError("qme: --init must be excited, ground or superposition");
  }
  const AtomParams p{c.y, c.gamma0, c.theta, c.q, c.omega_a};
  const auto traj = evolve(rho0, p, c.t_max, c.dt, {0.0, c.sample_every});
  CommandResult r;
  r.table.columns = {"t", "rho_ee", "rho_gg", "re_rho_eg", "im_rho_eg"};
  for (const auto& s : traj) {
    r.table.rows.push_back({s.t, s.rho.rho_ee, s.rho.rho_gg, s.rho.rho_eg.real(), s.rho.rho_eg.imag()});
  }
  return r;
}

}  // namespace ssbath::cli
