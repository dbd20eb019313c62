#include "ssbath/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "ssbath/bath.hpp"
#include "ssbath/cli.hpp"
#include "ssbath/error.hpp"
#include "ssbath/oracle.hpp"
#include "ssbath/qme.hpp"
#include "ssbath/specfun.hpp"
#include "ssbath/stark.hpp"
#include "ssbath/superstat.hpp"
#include "ssbath/thermo.hpp"

namespace ssbath::acceptance {

namespace {

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

double rel(Complex a, Complex b) { return std::abs(a - b) / std::abs(b); }

struct Outcome {
  bool pass;
  std::string summary;
};

Outcome special_functions() {
  std::mt19937_64 rng(20240601);
  std::uniform_real_distribution<double> re(1.0, 100.0), im(-1e3, 1e3);
  std::uniform_int_distribution<int> order(2, 5);
  double worst_rec = 0.0, worst_poly = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const Complex z(std::nextafter(re(rng), 101.0), im(rng));
    const int s = order(rng);
    const Complex a = specfun::hurwitz_zeta(s, z);
    const Complex b = specfun::hurwitz_zeta(s, z + 1.0);
    const Complex expect = std::pow(z, -s);
    worst_rec = std::max(worst_rec, std::abs(a - b - expect) / std::max(std::abs(a), std::abs(expect)));
    const int m = s <= 4 ? s - 1 : 3;
    const double sign_fact[] = {0.0, 1.0, -2.0, 6.0};
    const Complex ref = sign_fact[m] * specfun::hurwitz_zeta(m + 1, z);
    worst_poly = std::max(worst_poly, rel(specfun::polygamma(m, z), ref));
  }
  const bool ok = worst_rec <= 1e-12 && worst_poly <= 1e-12;
  return {ok, "recurrence max rel " + fmt("%.2e", worst_rec) + ", polygamma identity max rel " +
                  fmt("%.2e", worst_poly) + " (tol 1e-12, 1000 points)"};
}

Outcome closed_vs_quadrature() {
  double worst_j = 0.0;
  const int jk[3][2] = {{1, 1}, {1, 2}, {2, 2}};
  for (double b : {0.5, 1.0, 3.5, 15.0}) {
    for (const auto& kl : jk) {
      const double q = quad_j(kl[0], kl[1], b);
      worst_j = std::max(worst_j, std::abs(j_integral(kl[0], kl[1], b) - q) / std::abs(q));
    }
  }
  double worst_i = 0.0;
  const int ik[7][2] = {{0, 0}, {1, 0}, {1, 1}, {1, 2}, {2, 1}, {2, 2}, {3, 2}};
  for (double b : {3.5, 15.0}) {
    const BathParams p(1.0, 1.0, b, 1.0);
    for (int t = 0; t <= 100; ++t) {
      const double tau = 0.1 * t;
      const MasterIntegrals m = master_integrals(tau, p);
      const Complex closed[7] = {m.i00, m.i10, m.i11, m.i12, m.i21, m.i22, m.i32};
      for (int k = 0; k < 7; ++k) worst_i = std::max(worst_i, rel(closed[k], quad_i(ik[k][0], ik[k][1], tau, p)));
    }
  }
  const bool ok = worst_j <= 1e-10 && worst_i <= 1e-8;
  return {ok, "J max rel " + fmt("%.2e", worst_j) + " (tol 1e-10), I max rel " + fmt("%.2e", worst_i) +
                  " (tol 1e-8, 101 tau x 2 beta~)"};
}

Outcome gamma_average() {
  double worst = 0.0;
  for (double q : {1.01, 1.05, 1.1, 1.2}) {
    std::vector<double> energies;
    for (int i = 0; i <= 50; ++i) energies.push_back(0.1 * i);
    for (double e : energies) {
      const double closed = q_exp(-e, q);
      worst = std::max(worst, std::abs(ss_boltzmann_scalar(1.0, q, e) - closed) / closed);
    }
    const auto [quadr, closed] = oracle::gamma_average_check(1.0, q, energies);
    for (std::size_t i = 0; i < energies.size(); ++i) {
      worst = std::max(worst, std::abs(quadr[i] - closed[i]) / closed[i]);
    }
  }
  return {worst <= 1e-8, "max rel deviation " + fmt("%.2e", worst) + " (tol 1e-8)"};
}

Outcome residual_scaling() {
  const auto bath = oracle::DiscreteBath::standard();
  const char* names[5] = {"N", "D", "C", "U", "S"};
  bool ok = true;
  std::ostringstream os;
  for (double b : {1.0, 3.5}) {
    const auto cum = EnergyCumulants::discrete(bath.omegas, b);
    double res[2][5];
    for (int h = 0; h < 2; ++h) {
      const double q = 1.0 + (h == 0 ? 0.1 : 0.05);
      const auto ex = oracle::exact_traces(bath, b, q, 0.0);
      const Complex n = discrete_corr_n(bath.omegas, bath.kappas, b, q, 0.0);
      const double d = discrete_corr_d(bath.omegas, b, q);
      res[h][0] = std::abs(n - ex.n);
      res[h][1] = std::abs(d - ex.d);
      res[h][2] = std::abs(n / d - ex.c);
      res[h][3] = std::abs(internal_energy(cum, q) - ex.u);
      res[h][4] = std::abs(tsallis_entropy(cum, q) - ex.s);
    }
    os << "b~=" << b << ":";
    for (int k = 0; k < 5; ++k) {
      const double r = res[0][k] / res[1][k];
      ok = ok && r >= 3.5 && r <= 4.5;
      os << ' ' << names[k] << '=' << fmt("%.3f", r);
    }
    os << "; ";
  }
  os << "required ratio in [3.5, 4.5]";
  return {ok, os.str()};
}

Outcome q1_reductions() {
  bool ok = true;
  double worst = 0.0;
  for (double b : {0.5, 1.0, 3.5, 15.0}) {
    const BathParams p(1.0, 1.0, b, 1.0);
    ok = ok && corr_d(p) == 1.0;
    for (int t = 0; t <= 20; ++t) {
      const double tau = 0.5 * t;
      const auto s = correlation(tau, p);
      ok = ok && s.c_q == i_integral(1, 0, tau, p) && s.c_q == s.c_eq;
    }
    std::vector<double> taus;
    for (int t = 0; t <= 20; ++t) taus.push_back(0.5 * t);
    for (const auto& s : correlation_sweep(taus, p)) ok = ok && s.c_q == s.c_eq;
    worst = std::max(worst, std::abs(renormalized_beta(b, 1.0) - b) / b);
  }
  for (double y : {0.1, std::log(2.0), 1.0, 3.0, 10.0}) {
    for (double theta : {0.0, 1.0, 5.0}) {
      const AtomParams a{y, 1.3, theta, 1.0, 1.0};
      const Rates r = rates(a);
      const double n = bose_mean(1.0, y);
      worst = std::max(worst, std::abs(r.gamma1 - 1.3 * (n + 1.0) / 2.0) / r.gamma1);
      worst = std::max(worst, std::abs(r.gamma2 - 1.3 * n / 2.0) / r.gamma2);
      worst = std::max(worst, std::abs(r.gamma2 / r.gamma1 - std::exp(-y)) / std::exp(-y));
    }
  }
  for (const auto& e : temp_map(1.0, cli::log_grid(0.05, 20.0, 100))) {
    if (!e.t_physical) {
      ok = false;
      continue;
    }
    worst = std::max(worst, std::abs(*e.t_physical - e.t_tilde) / e.t_tilde);
  }
  ok = ok && worst <= 1e-14;
  return {ok, std::string(ok ? "D=1 and C_1=I(1,0) bit-for-bit; " : "exact identities violated; ") +
                  "rates, beta, T-map max rel " + fmt("%.2e", worst) + " (tol 1e-14)"};
}

Outcome thermo_gate() {
  std::ostringstream os;
  double worst = 0.0;
  for (double b : cli::log_grid(0.1, 20.0, 200)) {
    const double h = 1e-5 * b;
    const double du = internal_energy(b + h, 1.0) - internal_energy(b - h, 1.0);
    const double ds = tsallis_entropy(b + h, 1.0) - tsallis_entropy(b - h, 1.0);
    worst = std::max(worst, std::abs(ds / du - b) / b);
  }
  bool ok = worst <= 1e-6;
  os << "q=1 dS/dU vs b~ max rel " << fmt("%.1e", worst) << ";";

  std::vector<double> grid = cli::log_grid(0.05, 20.0, 400);
  for (const auto& pt : su_plane(1.0, grid)) ok = ok && pt.physical;
  for (double q : {0.8, 0.9, 0.98, 0.99}) {
    const auto pts = su_plane(q, grid);
    std::size_t discarded = 0;
    bool up_set = true;
    bool seen_discarded = false;
    double boundary = 0.0;
    for (const auto& pt : pts) {  // ascending beta~
      if (!pt.physical) {
        ++discarded;
        seen_discarded = true;
        boundary = pt.beta_tilde;
      } else if (seen_discarded) {
        up_set = false;  // kept point above a discarded one
      }
    }
    const bool exists = discarded > 0;
    ok = ok && exists && up_set;
    os << " q=" << q << ": " << discarded << "/" << pts.size() << " discarded";
    if (exists) os << " (all b~ <= " << fmt("%.3f", boundary) << ", T~ >= " << fmt("%.3f", 1.0 / boundary) << ")";
    os << (up_set ? " up-set" : " not an up-set in b~") << ";";
  }
  return {ok, os.str()};
}

Outcome qme_evolution() {
  const AtomParams a{1.0, 1.0, 0.5, 1.1, 2.0};
  const Rates r = rates(a);
  const double g = r.gamma1 + r.gamma2;
  const double dt = std::min(0.05 / g, 0.05 / a.omega_a);
  const auto traj = evolve({0.5, 0.5, Complex(0.3, 0.4)}, a, 20.0 / g, dt);
  double drift = 0.0, min_eig = 1.0;
  for (const auto& s : traj) {
    drift = std::max(drift, std::abs(s.rho.trace() - 1.0));
    min_eig = std::min(min_eig, s.rho.min_eigenvalue());
  }
  const DensityMatrix2 ss = steady_state(r);
  const auto& last = traj.back().rho;
  const double ss_err = std::max({std::abs(last.rho_ee - ss.rho_ee), std::abs(last.rho_gg - ss.rho_gg),
                                  std::abs(last.rho_eg)});

  // Order check on near-pure decay, against the exact two-rate solution.
  const AtomParams decay{40.0, 1.0, 0.0, 1.0, 1.0};
  const Rates rd = rates(decay);
  const double gd = rd.gamma1 + rd.gamma2;
  const double t_end = 2.0 / gd;
  auto endpoint_error = [&](double h) {
    const auto tr = evolve({1.0, 0.0, 0.0}, decay, t_end, h);
    const double inf = rd.gamma2 / gd;
    const double exact = inf + (1.0 - inf) * std::exp(-2.0 * gd * tr.back().t);
    return std::abs(tr.back().rho.rho_ee - exact);
  };
  const double h0 = std::min(0.05 / gd, 0.05 / decay.omega_a);
  const double factor = endpoint_error(h0) / endpoint_error(h0 / 2.0);

  const bool ok = drift <= 1e-12 && min_eig >= -1e-10 && ss_err <= 1e-8 && factor >= 15.0 && factor <= 17.0;
  return {ok, "trace drift " + fmt("%.1e", drift) + ", min eigenvalue " + fmt("%.1e", min_eig) +
                  ", steady-state error " + fmt("%.1e", ss_err) + ", RK4 halving factor " + fmt("%.2f", factor)};
}

Outcome stark_shift() {
  std::ostringstream os;
  const double theta = 1e-4;
  const auto r08 = critical_roots(0.8, theta);
  const auto r10 = critical_roots(1.0, theta);
  const auto r12 = critical_roots(1.2, theta);
  bool ok = r10.size() == 1 && !r08.empty() && !r12.empty();
  if (ok) {
    const double yc = r10.front();
    ok = stark_f({0.1, theta, 1.0}) < 0.0 && stark_f({0.5 * yc, theta, 1.0}) < 0.0 &&
         stark_f({2.0 * yc, theta, 1.0}) > 0.0 && stark_f({30.0, theta, 1.0}) > 0.0;
    ok = ok && r12.front() > yc && yc > r08.front();
  }
  auto list = [](const std::vector<double>& v) {
    std::string s;
    for (double x : v) s += (s.empty() ? "" : " ") + fmt("%.4f", x);
    return s.empty() ? std::string("none") : s;
  };
  os << "Theta=1e-4 roots q=0.8 [" << list(r08) << "], q=1 [" << list(r10) << "], q=1.2 [" << list(r12) << "]";
  os << (r08.size() >= 2 ? "; q=0.8 second transition found" : "; q=0.8 no second transition");

  // q-splitting as Theta grows: sup over the y window of |F(1.2) - F(1)|
  // (q = 0.8 makes D(T~,V) <= 0 at these Theta).
  double prev = INFINITY;
  bool shrinking = true;
  os << "; max_y |F(1.2)-F(1)| for Theta 1,10,100:";
  const auto ys = cli::log_grid(0.1, 30.0, 40);
  for (double th : {1.0, 10.0, 100.0}) {
    double split = 0.0;
    for (double y : ys) split = std::max(split, std::abs(stark_f({y, th, 1.2}) - stark_f({y, th, 1.0})));
    shrinking = shrinking && split < prev;
    prev = split;
    os << ' ' << fmt("%.3e", split);
  }
  ok = ok && shrinking;
  return {ok, os.str()};
}

Outcome correlation_figure() {
  auto mag_ratio = [](double b) {
    const BathParams p(1.0, 1.0, b, 1.2);
    return std::abs(correlation(0.0, p).c_q) / std::abs(correlation(0.0, p.with_q(1.0)).c_q);
  };
  const double r15 = mag_ratio(15.0);
  const double r35 = mag_ratio(3.5);
  const bool a = r15 < 1.0;
  const bool b = r15 < r35;

  // Suppression relative to equilibrium at the same physical temperature.
  const auto t_grid = cli::log_grid(0.05, 5.0, 200);
  std::vector<double> betas(t_grid.rbegin(), t_grid.rend());
  for (auto& x : betas) x = 1.0 / x;
  // Report the coldest grid point already below 0.5, with its Tr[rho^q].
  std::optional<ThermoPoint> coldest;
  double coldest_ratio = 0.0;
  for (const auto& pt : su_plane(1.2, betas)) {  // ascending beta~
    if (!pt.physical) continue;
    const BathParams p(1.0, 1.0, pt.beta_tilde, 1.2);
    try {
      const double r = std::abs(correlation(0.0, p).c_q) /
                       std::abs(correlation(0.0, BathParams(1.0, 1.0, *pt.beta_physical, 1.0)).c_q);
      if (r < 0.5) {
        coldest = pt;
        coldest_ratio = r;
      }
    } catch (const ValidityError&) {
    }
  }
  const bool c = coldest.has_value();
  std::string c_text = "no physical point below 0.5";
  if (c) {
    c_text = "ratio " + fmt("%.3f", coldest_ratio) + " < 0.5 up to b~=" + fmt("%.3f", coldest->beta_tilde) +
             " (T=" + fmt("%.3f", 1.0 / *coldest->beta_physical) + ", Tr[rho^q]=" +
             fmt("%.3f", coldest->trace_rho_q) + ")";
  }
  return {a && b && c, std::string("(a) |C_q(0)|/|C_1(0)| at b~wc=15: ") + fmt("%.4f", r15) +
                           (a ? " < 1" : " not < 1") + "; (b) at 3.5: " + fmt("%.4f", r35) +
                           (b ? ", suppression stronger at 15" : ", suppression not stronger at 15") +
                           "; (c) vs equilibrium at equal physical T: " + c_text};
}

Outcome determinism() {
  const cli::CorrelateConfig cc{};
  const std::string a1 = cli::render(cli::cmd_correlate(cc).table, cli::Format::csv);
  const std::string a2 = cli::render(cli::cmd_correlate(cc).table, cli::Format::csv);
  const cli::StarkConfig sc{1.2, 0.0, 0.1, 30.0, 60};
  const std::string b1 = cli::render(cli::cmd_stark(sc).table, cli::Format::csv);
  const std::string b2 = cli::render(cli::cmd_stark(sc).table, cli::Format::csv);
  const std::string j1 = cli::render(cli::cmd_correlate(cc).table, cli::Format::json);
  const std::string j2 = cli::render(cli::cmd_correlate(cc).table, cli::Format::json);
  const bool ok = a1 == a2 && b1 == b2 && j1 == j2;
  return {ok, std::string("correlate csv ") + (a1 == a2 ? "identical" : "differs") + ", stark csv " +
                  (b1 == b2 ? "identical" : "differs") + ", correlate json " + (j1 == j2 ? "identical" : "differs")};
}

struct Spec {
  const char* title;
  Outcome (*fn)();
  double max_seconds;  // 0 = no limit
};

const Spec kSpecs[kCriteria] = {
    {"special-function recurrences", &special_functions, 5.0},
    {"closed forms vs quadrature", &closed_vs_quadrature, 60.0},
    {"gamma average = q-exponential", &gamma_average, 0.0},
    {"discrete-oracle residual scaling", &residual_scaling, 0.0},
    {"q=1 exact reductions", &q1_reductions, 0.0},
    {"thermo gate", &thermo_gate, 0.0},
    {"QME evolution", &qme_evolution, 5.0},
    {"Stark shift orderings", &stark_shift, 120.0},
    {"correlation suppression", &correlation_figure, 0.0},
    {"CLI determinism", &determinism, 0.0},
};

}  // namespace

CriterionResult run(int id) {
  if (id < 1 || id > kCriteria) throw DomainError("acceptance: criterion id out of range");
  const Spec& s = kSpecs[id - 1];
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = s.fn();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::string summary = std::string(s.title) + ": " + o.summary;
  if (s.max_seconds > 0.0 && secs > s.max_seconds) {
    o.pass = false;
    summary += "; runtime over " + fmt("%.0f", s.max_seconds) + " s";
  }
  return {id, o.pass, summary, secs};
}

std::vector<CriterionResult> run_all(std::ostream& out) {
  std::vector<CriterionResult> all;
  for (int id = 1; id <= kCriteria; ++id) {
    all.push_back(run(id));
    out << format(all.back()) << '\n' << std::flush;
  }
  return all;
}

std::string format(const CriterionResult& r) {
  char head[64];
  std::snprintf(head, sizeof head, "criterion %2d %s [%.2fs] ", r.id, r.pass ? "PASS" : "FAIL", r.seconds);
  return head + r.summary;
}

}  // namespace ssbath::acceptance
