#include "ssbath/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "ssbath/bath.hpp"
#include "ssbath/error.hpp"
#include "ssbath/specfun.hpp"

namespace ssbath {

EnergyCumulants EnergyCumulants::ohmic(double beta_tilde) {
  if (!(beta_tilde > 0.0)) throw DomainError("EnergyCumulants: beta_tilde must be > 0");
  const double b = beta_tilde;
  const double z3 = specfun::riemann_zeta(3);
  const double b2 = b * b;
  return {b, z3 / b2, 2.0 * z3 / (b2 * b), 6.0 * z3 / (b2 * b2), 24.0 * z3 / (b2 * b2 * b)};
}

EnergyCumulants EnergyCumulants::discrete(std::span<const double> omegas, double beta_tilde) {
  EnergyCumulants c{beta_tilde, 0.0, 0.0, 0.0, 0.0};
  for (double w : omegas) {
    const double n = bose_mean(beta_tilde, w);
    c.log_z -= std::log(-std::expm1(-beta_tilde * w));
    c.k1 += w * n;
    c.k2 += w * w * n * (n + 1.0);
    c.k3 += w * w * w * n * (n + 1.0) * (2.0 * n + 1.0);
  }
  return c;
}

double equilibrium_entropy(const EnergyCumulants& c) { return c.beta_tilde * c.k1 + c.log_z; }

double internal_energy(const EnergyCumulants& c, double q) {
  const double b = c.beta_tilde;
  const double e = q - 1.0;
  return c.k1 + e * (-b * c.k2 + 0.5 * b * b * (c.k3 + 2.0 * c.k1 * c.k2));
}

double tsallis_entropy(const EnergyCumulants& c, double q) {
  const double b = c.beta_tilde;
  const double e = q - 1.0;
  const double s0 = equilibrium_entropy(c);
  return s0 + e * (0.5 * b * b * b * (c.k3 + 2.0 * c.k1 * c.k2) - 0.5 * (b * b * c.k2 + s0 * s0));
}

double trace_rho_q(const EnergyCumulants& c, double q) {
  const double t = 1.0 - (q - 1.0) * equilibrium_entropy(c);
  if (!(t > 0.0)) throw NumericError("trace_rho_q: first-order trace <= 0", t, 0.0);
  return t;
}

double escort_energy_trace(const EnergyCumulants& c, double q) {
  const double b = c.beta_tilde;
  const double e = q - 1.0;
  return c.k1 + e * (0.5 * b * b * (c.k3 + 2.0 * c.k1 * c.k2) - b * (c.k2 + c.k1 * c.k1) - c.log_z * c.k1);
}

double renormalized_beta(const EnergyCumulants& c, double q) {
  const double tr = trace_rho_q(c, q);
  const double den = 1.0 - (1.0 - q) * c.beta_tilde * escort_energy_trace(c, q) / tr;
  if (!(den > 0.0)) {
    throw ValidityError("renormalized_beta: denominator " + std::to_string(den) + " <= 0");
  }
  return c.beta_tilde * tr / den;
}

double internal_energy(double beta_tilde, double q) {
  return internal_energy(EnergyCumulants::ohmic(beta_tilde), q);
}
double tsallis_entropy(double beta_tilde, double q) {
  return tsallis_entropy(EnergyCumulants::ohmic(beta_tilde), q);
}
double trace_rho_q(double beta_tilde, double q) { return trace_rho_q(EnergyCumulants::ohmic(beta_tilde), q); }
double renormalized_beta(double beta_tilde, double q) {
  return renormalized_beta(EnergyCumulants::ohmic(beta_tilde), q);
}

std::vector<ThermoPoint> su_plane(double q, std::span<const double> grid) {
  if (grid.size() < 3) throw DomainError("su_plane: grid needs at least 3 points");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] > 0.0)) throw DomainError("su_plane: beta_tilde must be > 0");
    if (i > 0 && !(grid[i] > grid[i - 1])) throw DomainError("su_plane: grid must be strictly ascending");
  }

  std::vector<ThermoPoint> out(grid.size());
  std::vector<char> ok(grid.size());
  std::vector<double> du(grid.size()), ds(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double b = grid[i];
    ThermoPoint& pt = out[i];
    pt.beta_tilde = b;
    pt.q = q;
    pt.u = internal_energy(b, q);
    pt.s = tsallis_entropy(b, q);
    pt.trace_rho_q = 1.0 - (q - 1.0) * equilibrium_entropy(EnergyCumulants::ohmic(b));
    pt.physical = false;

    const double h = 1e-5 * b;
    du[i] = (internal_energy(b + h, q) - internal_energy(b - h, q)) / (2.0 * h);
    ds[i] = (tsallis_entropy(b + h, q) - tsallis_entropy(b - h, q)) / (2.0 * h);

    bool good = std::isfinite(pt.u) && std::isfinite(pt.s) && std::isfinite(du[i]) && std::isfinite(ds[i]);
    try {
      pt.beta_physical = renormalized_beta(b, q);
    } catch (const std::runtime_error&) {
      good = false;
    }
    ok[i] = good;
  }

  // Walk from the coldest point. U must grow and S(U) must stay a rising
  // single-valued curve; the first failure cuts off everything hotter.
  double prev_u = -INFINITY;
  for (std::size_t r = grid.size(); r-- > 0;) {
    ThermoPoint& pt = out[r];
    const bool rising = du[r] < 0.0 && ds[r] / du[r] > 0.0;
    if (!ok[r] || !rising || !(pt.u > prev_u)) break;
    pt.physical = true;
    prev_u = pt.u;
  }
  for (auto& pt : out) {
    if (!pt.physical) pt.beta_physical.reset();
  }
  return out;
}

std::vector<TempMapEntry> temp_map(double q, std::span<const double> t_tilde_grid) {
  const std::size_t n = t_tilde_grid.size();
  for (double t : t_tilde_grid) {
    if (!(t > 0.0)) throw DomainError("temp_map: T~ must be > 0");
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  // Ascending beta~ is descending T~.
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return t_tilde_grid[a] > t_tilde_grid[b]; });

  std::vector<double> betas;
  for (std::size_t idx : order) {
    const double b = 1.0 / t_tilde_grid[idx];
    if (betas.empty() || b > betas.back()) {
      betas.push_back(b);
    }
  }
  std::vector<TempMapEntry> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i].t_tilde = t_tilde_grid[i];
  if (betas.size() < 3) throw DomainError("temp_map: need at least 3 distinct temperatures");

  const auto pts = su_plane(q, betas);
  std::vector<std::optional<double>> by_beta(pts.size());
  for (std::size_t k = 0; k < pts.size(); ++k) {
    if (pts[k].physical) by_beta[k] = 1.0 / *pts[k].beta_physical;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const double b = 1.0 / t_tilde_grid[i];
    const auto it = std::lower_bound(betas.begin(), betas.end(), b);
    out[i].t_physical = by_beta[static_cast<std::size_t>(it - betas.begin())];
  }
  return out;
}

}  // namespace ssbath
