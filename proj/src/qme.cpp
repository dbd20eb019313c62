#include "ssbath/qme.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "ssbath/bath.hpp"
#include "ssbath/error.hpp"

namespace ssbath {

void AtomParams::validate() const {
  if (!(y > 0.0)) throw DomainError("AtomParams: y must be > 0");
  if (!(gamma0 > 0.0)) throw DomainError("AtomParams: gamma0 must be > 0");
  if (!(theta >= 0.0)) throw DomainError("AtomParams: theta must be >= 0");
  if (!(omega_a > 0.0)) throw DomainError("AtomParams: omega_a must be > 0");
}

double DensityMatrix2::min_eigenvalue() const {
  const double mean = 0.5 * (rho_ee + rho_gg);
  const double half = 0.5 * (rho_ee - rho_gg);
  return mean - std::sqrt(half * half + std::norm(rho_eg));
}

double cavity_theta(double volume, double t_tilde) {
  if (volume < 0.0 || !(t_tilde > 0.0)) throw DomainError("cavity_theta: requires V >= 0, T~ > 0");
  return std::numbers::pi * std::numbers::pi * volume / 15.0 * t_tilde * t_tilde * t_tilde;
}

double d_tv(double theta, double q) {
  if (theta < 0.0) throw DomainError("d_tv: theta < 0");
  const double d = 1.0 + 0.5 * (q - 1.0) * theta * (theta + 2.0);
  if (!(d > 0.0)) throw ValidityError("d_tv: D(T~,V) = " + std::to_string(d) + " <= 0");
  return d;
}

double cal_f(double y, double theta) {
  const double n = bose_mean(1.0, y);
  return 0.5 * y * y * n * (n + 1.0) - y * n + 0.5 * theta * theta;
}

double cal_g(double y, double theta) {
  const double n = bose_mean(1.0, y);
  const double nn = n * (n + 1.0);
  return 0.5 * y * y * nn * (2.0 * n + 1.0) - y * nn + 0.5 * theta * (2.0 * y * nn + 2.0 * n + theta * n);
}

Rates rates(const AtomParams& p) {
  p.validate();
  const double d = d_tv(p.theta, p.q);
  const double n = bose_mean(1.0, p.y);
  const double e = p.q - 1.0;
  const double g = cal_g(p.y, p.theta);
  const Rates r{0.5 * p.gamma0 * ((n + 1.0) / d + e * (cal_f(p.y, p.theta) + g)),
                0.5 * p.gamma0 * (n / d + e * g)};
  if (!(r.gamma1 > 0.0) || !(r.gamma2 >= 0.0)) {
    throw ValidityError("rates: unphysical rates G1=" + std::to_string(r.gamma1) +
                        " G2=" + std::to_string(r.gamma2));
  }
  return r;
}

DensityMatrix2 steady_state(const Rates& r) {
  const double ee = r.gamma2 / (r.gamma1 + r.gamma2);
  return {ee, r.gamma1 / (r.gamma1 + r.gamma2), 0.0};
}

DensityMatrix2 lindblad_rhs(const DensityMatrix2& rho, const AtomParams& p, double gamma1, double gamma2,
                            double shift) {
  const double flow = 2.0 * gamma1 * rho.rho_ee - 2.0 * gamma2 * rho.rho_gg;
  const Complex coh = Complex(-(gamma1 + gamma2), -(p.omega_a + shift)) * rho.rho_eg;
  return {-flow, flow, coh};
}

namespace {

DensityMatrix2 axpy(const DensityMatrix2& x, double a, const DensityMatrix2& k) {
  return {x.rho_ee + a * k.rho_ee, x.rho_gg + a * k.rho_gg, x.rho_eg + a * k.rho_eg};
}

}  // namespace

std::vector<TrajectorySample> evolve(const DensityMatrix2& rho0, const AtomParams& p, double t_max, double dt,
                                     const EvolveOptions& opts) {
  const Rates r = rates(p);
  if (!(dt > 0.0) || !(t_max >= 0.0)) throw ConfigError("evolve: need dt > 0 and t_max >= 0");
  if (dt > 0.05 / (r.gamma1 + r.gamma2) * (1.0 + 1e-12)) {
    throw ConfigError("evolve: dt exceeds 0.05/(G1+G2) = " + std::to_string(0.05 / (r.gamma1 + r.gamma2)));
  }
  if (dt > 0.05 / std::abs(p.omega_a + opts.shift) * (1.0 + 1e-12)) {
    throw ConfigError("evolve: dt exceeds 0.05/omega_a");
  }
  if (opts.sample_every < 1) throw ConfigError("evolve: sample_every must be >= 1");

  const auto steps = static_cast<long long>(std::llround(t_max / dt));
  auto f = [&](const DensityMatrix2& x) { return lindblad_rhs(x, p, r.gamma1, r.gamma2, opts.shift); };

  std::vector<TrajectorySample> out;
  out.push_back({0.0, rho0});
  DensityMatrix2 x = rho0;
  for (long long i = 1; i <= steps; ++i) {
    const DensityMatrix2 k1 = f(x);
    const DensityMatrix2 k2 = f(axpy(x, 0.5 * dt, k1));
    const DensityMatrix2 k3 = f(axpy(x, 0.5 * dt, k2));
    const DensityMatrix2 k4 = f(axpy(x, dt, k3));
    x.rho_ee += dt / 6.0 * (k1.rho_ee + 2.0 * k2.rho_ee + 2.0 * k3.rho_ee + k4.rho_ee);
    x.rho_gg += dt / 6.0 * (k1.rho_gg + 2.0 * k2.rho_gg + 2.0 * k3.rho_gg + k4.rho_gg);
    x.rho_eg += dt / 6.0 * (k1.rho_eg + 2.0 * k2.rho_eg + 2.0 * k3.rho_eg + k4.rho_eg);
    if (i % opts.sample_every == 0 || i == steps) out.push_back({static_cast<double>(i) * dt, x});
  }
  return out;
}

}  // namespace ssbath
