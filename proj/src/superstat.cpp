#include "ssbath/superstat.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ssbath/error.hpp"
#include "ssbath/quad.hpp"

namespace ssbath {

GammaDist::GammaDist(double scale, double shape) : b(scale), c(shape) {
  if (!(scale > 0.0) || !(shape > 0.0)) throw DomainError("GammaDist: scale and shape must be > 0");
}

GammaDist GammaDist::from_tsallis(double beta, double q) {
  if (!(q > 1.0)) throw DomainError("GammaDist::from_tsallis: requires q > 1");
  if (!(beta > 0.0)) throw DomainError("GammaDist::from_tsallis: requires beta > 0");
  const double c = 1.0 / (q - 1.0);
  return {beta / c, c};
}

double gamma_pdf(const GammaDist& d, double beta_bar) {
  if (beta_bar < 0.0) throw DomainError("gamma_pdf: beta_bar < 0");
  if (beta_bar == 0.0) {
    if (d.c == 1.0) return 1.0 / d.b;
    return d.c > 1.0 ? 0.0 : INFINITY;
  }
  const double u = beta_bar / d.b;
  return std::exp((d.c - 1.0) * std::log(u) - u - std::lgamma(d.c)) / d.b;
}

double q_exp(double x, double q) {
  if (q == 1.0) return std::exp(x);
  const double arg = (1.0 - q) * x;
  if (!(1.0 + arg > 0.0)) {
    throw DomainError("q_exp: 1 + (1-q) x <= 0, outside the Tsallis support");
  }
  return std::exp(std::log1p(arg) / (1.0 - q));
}

double ss_boltzmann_scalar(double beta, double q, double energy) {
  if (!(q > 1.0)) throw DomainError("ss_boltzmann_scalar: gamma representation requires q > 1");
  if (energy < 0.0) throw DomainError("ss_boltzmann_scalar: energy < 0");
  const GammaDist d = GammaDist::from_tsallis(beta, q);
  // In u = beta_bar/b the integrand is u^{c-1} e^{-lam u}/Gamma(c).
  const double lam = 1.0 + d.b * energy;
  const double lg = std::lgamma(d.c);
  auto f = [&](double u) {
    if (u <= 0.0) return 0.0;
    return std::exp((d.c - 1.0) * std::log(u) - lam * u - lg);
  };
  const double peak = std::max(d.c - 1.0, 0.0) / lam;
  const double width = std::sqrt(d.c) / lam;
  const double hi = peak + 60.0 * width + 60.0 / lam;
  const quad::Tolerance tol{1e-13, 0.0, 4000};
  double total = 0.0;
  if (peak > 0.0) total += quad::integrate(f, 0.0, peak, tol).value;
  total += quad::integrate(f, peak, hi, tol).value;
  return total;
}

double q_from_sigma(double sigma, double beta) {
  if (!(beta > 0.0)) throw DomainError("q_from_sigma: beta must be > 0");
  if (sigma < 0.0) throw DomainError("q_from_sigma: sigma must be >= 0");
  return 1.0 + (sigma * sigma) / (beta * beta);
}

namespace {

struct JSet {
  double j11, j12, j22;
};

JSet j_set(double b) { return {j_integral(1, 1, b), j_integral(1, 2, b), j_integral(2, 2, b)}; }

Complex n_from(const MasterIntegrals& m, const JSet& j, double eps, double b) {
  const Complex bracket2 = j.j11 * j.j11 * m.i10 + 2.0 * m.i32 + 3.0 * m.i22 + m.i12 +
                           m.i10 * (j.j22 + j.j12) + 2.0 * j.j11 * (m.i21 + m.i11);
  const Complex bracket1 = m.i21 + m.i11 + j.j11 * m.i10;
  return m.i10 + (eps * b * b / 2.0) * bracket2 - (eps * b) * bracket1;
}

double d_from(const JSet& j, double eps, double b) {
  const double d = 1.0 - (eps * b / 2.0) * (2.0 * j.j11 - b * (j.j22 + j.j12 + j.j11 * j.j11));
  if (!(d > 0.0)) {
    throw ValidityError("corr_d: D = " + std::to_string(d) + " <= 0, first-order expansion broke down");
  }
  return d;
}

// Takes master integrals evaluated at -tau.
Complex m_from(const MasterIntegrals& neg, const JSet& j, double eps, double b) {
  return neg.i00 + (eps * b / 2.0) * (b * (j.j11 * j.j11 * neg.i00 + neg.i22 + neg.i12) - 2.0 * neg.i11);
}

CorrelationSample assemble(double tau, const MasterIntegrals& pos, const MasterIntegrals& neg,
                           const JSet& j, const BathParams& p) {
  const double eps = p.q() - 1.0;
  const double b = p.beta_tilde();
  const double d = d_from(j, eps, b);
  const Complex n = n_from(pos, j, eps, b);
  const Complex m = m_from(neg, j, eps, b);
  return {tau, n / d, (std::conj(n) + m) / d, pos.i10};
}

}  // namespace

Complex corr_n(double tau, const BathParams& p) {
  return n_from(master_integrals(tau, p), j_set(p.beta_tilde()), p.q() - 1.0, p.beta_tilde());
}

double corr_d(const BathParams& p) { return d_from(j_set(p.beta_tilde()), p.q() - 1.0, p.beta_tilde()); }

Complex corr_m(double tau, const BathParams& p) {
  return m_from(master_integrals(-tau, p), j_set(p.beta_tilde()), p.q() - 1.0, p.beta_tilde());
}

CorrelationSample correlation(double tau, const BathParams& p) {
  return assemble(tau, master_integrals(tau, p), master_integrals(-tau, p), j_set(p.beta_tilde()), p);
}

std::vector<CorrelationSample> correlation_sweep(std::span<const double> taus, const BathParams& p) {
  std::vector<double> neg(taus.size());
  std::transform(taus.begin(), taus.end(), neg.begin(), [](double t) { return -t; });
  const auto pos_m = master_integrals_batch(taus, p);
  const auto neg_m = master_integrals_batch(neg, p);
  const JSet j = j_set(p.beta_tilde());
  std::vector<CorrelationSample> out;
  out.reserve(taus.size());
  for (std::size_t i = 0; i < taus.size(); ++i) out.push_back(assemble(taus[i], pos_m[i], neg_m[i], j, p));
  return out;
}

namespace {

struct DiscreteCumulants {
  double k1 = 0.0;
  double k2 = 0.0;
};

DiscreteCumulants discrete_cumulants(std::span<const double> omegas, double b) {
  DiscreteCumulants c;
  for (double w : omegas) {
    const double n = bose_mean(b, w);
    c.k1 += w * n;
    c.k2 += w * w * n * (n + 1.0);
  }
  return c;
}

}  // namespace

Complex discrete_corr_n(std::span<const double> omegas, std::span<const double> kappas,
                        double beta_tilde, double q, double tau) {
  if (kappas.size() != omegas.size()) throw DomainError("discrete_corr_n: omegas/kappas length mismatch");
  const double eps = q - 1.0;
  const double b = beta_tilde;
  const DiscreteCumulants c = discrete_cumulants(omegas, b);
  Complex total = 0.0;
  for (std::size_t j = 0; j < omegas.size(); ++j) {
    const double w = omegas[j];
    const double n = bose_mean(b, w);
    const double second = w * w * (2.0 * n * n + 3.0 * n + 1.0) + c.k1 * c.k1 + c.k2 + 2.0 * w * (n + 1.0) * c.k1;
    const double first = w * (n + 1.0) + c.k1;
    const double nj = n + (eps * b / 2.0) * n * (b * second - 2.0 * first);
    total += kappas[j] * kappas[j] * std::polar(1.0, w * tau) * nj;
  }
  return total;
}

double discrete_corr_d(std::span<const double> omegas, double beta_tilde, double q) {
  const double b = beta_tilde;
  const DiscreteCumulants c = discrete_cumulants(omegas, b);
  const double d = 1.0 + ((q - 1.0) * b / 2.0) * (b * (c.k2 + c.k1 * c.k1) - 2.0 * c.k1);
  if (!(d > 0.0)) throw ValidityError("discrete_corr_d: D <= 0");
  return d;
}

}  // namespace ssbath
