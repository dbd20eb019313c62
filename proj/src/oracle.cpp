#include "ssbath/oracle.hpp"

#include <cmath>
#include <string>

#include "ssbath/bath.hpp"
#include "ssbath/error.hpp"
#include "ssbath/quad.hpp"
#include "ssbath/superstat.hpp"

namespace ssbath::oracle {

DiscreteBath::DiscreteBath(std::vector<double> w, std::vector<double> k, int n)
    : omegas(std::move(w)), kappas(std::move(k)), n_max(n) {
  if (omegas.empty() || omegas.size() != kappas.size()) {
    throw ConfigError("DiscreteBath: need matching non-empty omegas and kappas");
  }
  for (double x : omegas) {
    if (!(x > 0.0)) throw ConfigError("DiscreteBath: frequencies must be > 0");
  }
  if (n_max < 1) throw ConfigError("DiscreteBath: n_max must be >= 1");
}

DiscreteBath DiscreteBath::standard() { return {{0.7, 1.0, 1.9}, {1.0, 1.0, 1.0}, 50}; }

void DiscreteBath::check_truncation(double beta) const {
  double wmin = omegas.front();
  for (double w : omegas) wmin = std::min(wmin, w);
  if (!(std::exp(-beta * wmin * n_max) < 1e-12)) {
    throw ConfigError("DiscreteBath: n_max=" + std::to_string(n_max) + " inadequate at beta=" +
                      std::to_string(beta));
  }
}

namespace {

// Calls visit(E, n) for every configuration of the truncated Fock space.
template <typename Visit>
void for_each_config(const DiscreteBath& b, Visit&& visit) {
  const std::size_t k = b.modes();
  double configs = std::pow(b.n_max + 1.0, static_cast<double>(k));
  if (configs > 5e7) throw ConfigError("DiscreteBath: configuration space too large for direct summation");
  std::vector<int> n(k, 0);
  for (;;) {
    double e = 0.0;
    for (std::size_t j = 0; j < k; ++j) e += b.omegas[j] * n[j];
    visit(e, n);
    std::size_t j = 0;
    while (j < k && ++n[j] > b.n_max) n[j++] = 0;
    if (j == k) break;
  }
}

double observable_value(Observable obs, double e, int nj) {
  switch (obs) {
    case Observable::one: return 1.0;
    case Observable::energy: return e;
    case Observable::energy_sq: return e * e;
    case Observable::number: return nj;
    case Observable::energy_number: return e * nj;
    case Observable::energy_sq_number: return e * e * nj;
  }
  return 0.0;
}

// Sum_n n^p e^{-beta w n} = Z <n^p>, untruncated.
double mode_moment(double beta, double w, int p) {
  const double z = 1.0 / -std::expm1(-beta * w);
  return p == 0 ? z : z * bose_moment(p, beta, w);
}

double geometric_trace(const DiscreteBath& b, double beta, Observable obs, std::size_t mode) {
  const std::size_t k = b.modes();
  int h_power = 0;
  bool with_number = false;
  switch (obs) {
    case Observable::one: break;
    case Observable::energy: h_power = 1; break;
    case Observable::energy_sq: h_power = 2; break;
    case Observable::number: with_number = true; break;
    case Observable::energy_number: h_power = 1; with_number = true; break;
    case Observable::energy_sq_number: h_power = 2; with_number = true; break;
  }
  // H^a n_j expands into monomials prod_m n_m^{p_m}; each factorizes per mode.
  const std::size_t terms = h_power == 0 ? 1 : (h_power == 1 ? k : k * k);
  double total = 0.0;
  for (std::size_t t = 0; t < terms; ++t) {
    std::vector<int> pw(k, 0);
    double coeff = 1.0;
    if (h_power >= 1) {
      pw[t % k] += 1;
      coeff *= b.omegas[t % k];
    }
    if (h_power == 2) {
      pw[t / k] += 1;
      coeff *= b.omegas[t / k];
    }
    if (with_number) pw[mode] += 1;
    double prod = coeff;
    for (std::size_t m = 0; m < k; ++m) prod *= mode_moment(beta, b.omegas[m], pw[m]);
    total += prod;
  }
  return total;
}

double log_equilibrium_z(const DiscreteBath& b, double beta) {
  double s = 0.0;
  for (double w : b.omegas) s -= std::log(-std::expm1(-beta * w));
  return s;
}

struct RawSums {
  double eq = 0.0;        // Tr e_q
  double eqq = 0.0;       // Tr e_q^q
  double eqq_e = 0.0;     // Tr e_q^q H
  std::vector<double> eqq_n;  // Tr e_q^q n_j
  double ent = 0.0;       // -sum p ln p numerator (q = 1 only)
};

RawSums direct_sums(const DiscreteBath& b, double bt, double q) {
  const double e = q - 1.0;
  RawSums r;
  r.eqq_n.assign(b.modes(), 0.0);
  double plogp = 0.0;
  for_each_config(b, [&](double en, const std::vector<int>& n) {
    double w1, wq;
    if (e == 0.0) {
      w1 = wq = std::exp(-bt * en);
      plogp += w1 * bt * en;
    } else {
      const double base = 1.0 + e * bt * en;
      if (!(base > 0.0)) throw DomainError("exact_traces: configuration outside the Tsallis support");
      const double lb = std::log(base);
      w1 = std::exp(-lb / e);
      wq = std::exp(-q * lb / e);
    }
    r.eq += w1;
    r.eqq += wq;
    r.eqq_e += wq * en;
    for (std::size_t j = 0; j < n.size(); ++j) r.eqq_n[j] += wq * n[j];
  });
  r.ent = plogp;
  return r;
}

// int_0^inf Gamma(shape, scale)(x) g(x) dx in s = ln x.
double gamma_log_quadrature(double shape, double scale, const std::function<double(double)>& g) {
  const double lmean = std::log(shape * scale);
  const double norm = std::lgamma(shape) + shape * std::log(scale);
  auto f = [&](double s) {
    const double x = std::exp(s);
    return std::exp(shape * s - x / scale - norm) * g(x);
  };
  const quad::Tolerance tol{1e-13, 0.0, 4000};
  const double lo = lmean - 12.0;
  const double hi = lmean + 4.0;
  return quad::integrate(f, lo, lmean, tol).value + quad::integrate(f, lmean, hi, tol).value;
}

RawSums gamma_sums(const DiscreteBath& b, double bt, double q) {
  if (!(q > 1.0)) throw DomainError("exact_traces: gamma-average path requires q > 1");
  const double e = q - 1.0;
  const double scale = e * bt;
  RawSums r;
  auto tr = [&](Observable o, std::size_t j) {
    return [&b, o, j](double x) { return geometric_trace(b, x, o, j); };
  };
  r.eq = gamma_log_quadrature(1.0 / e, scale, tr(Observable::one, 0));
  r.eqq = gamma_log_quadrature(q / e, scale, tr(Observable::one, 0));
  r.eqq_e = gamma_log_quadrature(q / e, scale, tr(Observable::energy, 0));
  for (std::size_t j = 0; j < b.modes(); ++j) {
    r.eqq_n.push_back(gamma_log_quadrature(q / e, scale, tr(Observable::number, j)));
  }
  return r;
}

}  // namespace

double exact_trace(const DiscreteBath& b, double beta, Observable obs, std::size_t mode, TracePath path) {
  if (!(beta > 0.0)) throw DomainError("exact_trace: beta must be > 0");
  if (mode >= b.modes()) throw DomainError("exact_trace: mode index out of range");
  if (path == TracePath::geometric) return geometric_trace(b, beta, obs, mode);
  b.check_truncation(beta);
  double total = 0.0;
  for_each_config(b, [&](double e, const std::vector<int>& n) {
    total += std::exp(-beta * e) * observable_value(obs, e, n[mode]);
  });
  return total;
}

ExactTraces exact_traces(const DiscreteBath& b, double beta_tilde, double q, double tau, QPath path) {
  if (!(beta_tilde > 0.0)) throw DomainError("exact_traces: beta_tilde must be > 0");
  RawSums r;
  if (path == QPath::gamma_average) {
    r = gamma_sums(b, beta_tilde, q);
  } else {
    b.check_truncation(beta_tilde);
    r = direct_sums(b, beta_tilde, q);
  }
  const double zeq = std::exp(log_equilibrium_z(b, beta_tilde));
  ExactTraces t{};
  t.d = r.eqq / zeq;
  for (std::size_t j = 0; j < b.modes(); ++j) {
    t.n += b.kappas[j] * b.kappas[j] * std::polar(1.0, b.omegas[j] * tau) * (r.eqq_n[j] / zeq);
  }
  t.c = t.n / t.d;
  t.u = r.eqq_e / r.eqq;
  const double zq = std::pow(r.eq, q);
  t.trace_rho_q = r.eqq / zq;
  t.escort_energy = r.eqq_e / zq;
  if (q == 1.0) {
    t.s = r.ent / r.eq + std::log(r.eq);
  } else {
    t.s = (1.0 - t.trace_rho_q) / (q - 1.0);
  }
  return t;
}

Complex exact_correlation(const DiscreteBath& b, double beta_tilde, double q, double tau, QPath path) {
  return exact_traces(b, beta_tilde, q, tau, path).c;
}

std::pair<std::vector<double>, std::vector<double>> gamma_average_check(double beta, double q,
                                                                        std::span<const double> energies) {
  if (!(q > 1.0 && q <= 1.3)) throw DomainError("gamma_average_check: q must lie in (1, 1.3]");
  if (!(beta > 0.0)) throw DomainError("gamma_average_check: beta must be > 0");
  const double shape = 1.0 / (q - 1.0);
  const double scale = beta * (q - 1.0);
  std::pair<std::vector<double>, std::vector<double>> out;
  for (double e : energies) {
    if (e < 0.0) throw DomainError("gamma_average_check: energies must be >= 0");
    out.first.push_back(gamma_log_quadrature(shape, scale, [e](double x) { return std::exp(-x * e); }));
    out.second.push_back(q_exp(-beta * e, q));
  }
  return out;
}

}  // namespace ssbath::oracle
