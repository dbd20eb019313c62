#include "ssbath/bath.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "ssbath/error.hpp"
#include "ssbath/quad.hpp"

namespace ssbath {

BathParams::BathParams(double alpha, double omega_c, double beta_tilde, double q)
    : alpha_(alpha), omega_c_(omega_c), beta_tilde_(beta_tilde), q_(q) {
  if (!(alpha > 0.0) || !(omega_c > 0.0) || !(beta_tilde > 0.0)) {
    throw DomainError("BathParams: alpha, omega_c, beta_tilde must be > 0");
  }
  if (!(q > 0.5 && q < 1.5)) {
    throw DomainError("BathParams: q=" + std::to_string(q) + " outside (0.5, 1.5)");
  }
}

double bose_mean(double beta_tilde, double omega) {
  const double x = beta_tilde * omega;
  if (!(x > 0.0)) throw DomainError("bose_mean: requires beta_tilde*omega > 0");
  if (x < 1e-8) return 1.0 / x - 0.5 + x / 12.0;
  return 1.0 / std::expm1(x);
}

double bose_moment(int k, double beta_tilde, double omega) {
  const double n = bose_mean(beta_tilde, omega);
  switch (k) {
    case 1: return n;
    case 2: return 2.0 * n * n + n;
    case 3: return 6.0 * n * n * n + 6.0 * n * n + n;
    default: throw DomainError("bose_moment: k=" + std::to_string(k) + " unsupported");
  }
}

double spectral_density(double omega, const BathParams& p) {
  if (omega < 0.0) throw DomainError("spectral_density: omega < 0");
  return 2.0 * p.alpha() * p.omega_c() * omega * std::exp(-omega / p.omega_c());
}

double j_integral(int k, int l, double beta_tilde) {
  if (!(beta_tilde > 0.0)) throw DomainError("j_integral: beta_tilde must be > 0");
  constexpr double pi4 = std::numbers::pi * std::numbers::pi * std::numbers::pi * std::numbers::pi;
  const double b = beta_tilde;
  const double z3 = specfun::riemann_zeta(3);
  if (k == 1 && l == 1) return 2.0 * z3 / (b * b * b);
  if (k == 1 && l == 2) return pi4 / (15.0 * b * b * b * b);
  if (k == 2 && l == 2) return (90.0 * z3 - pi4) / (15.0 * b * b * b * b);
  throw DomainError("j_integral: (k,l)=(" + std::to_string(k) + "," + std::to_string(l) + ") unsupported");
}

namespace {

// Geometric expansion of n^k turns every I(k,l) into zeta_s(Lambda), s = 2..4.
MasterIntegrals combine(double tau, const BathParams& p, Complex lam, Complex z2, Complex z3, Complex z4) {
  const double a = p.alpha() * p.omega_c();
  const double b = p.beta_tilde();
  const double b2 = b * b;
  const double b3 = b2 * b;
  const double b4 = b3 * b;
  const double wc = p.omega_c();
  const Complex den = Complex(1.0, -wc * tau);

  MasterIntegrals m;
  m.i00 = 2.0 * a * wc * wc / (den * den);
  m.i10 = (2.0 * a / b2) * z2;
  m.i11 = (4.0 * a / b3) * z3;
  m.i12 = (12.0 * a / b4) * z4;
  m.i21 = (4.0 * a / b3) * (z2 - lam * z3);
  m.i22 = (12.0 * a / b4) * (z3 - lam * z4);
  m.i32 = (6.0 * a / b4) * (z2 - (2.0 * lam + 1.0) * z3 + lam * (lam + 1.0) * z4);
  return m;
}

Complex pick(const MasterIntegrals& m, int k, int l) {
  if (k == 0 && l == 0) return m.i00;
  if (k == 1 && l == 0) return m.i10;
  if (k == 1 && l == 1) return m.i11;
  if (k == 1 && l == 2) return m.i12;
  if (k == 2 && l == 1) return m.i21;
  if (k == 2 && l == 2) return m.i22;
  if (k == 3 && l == 2) return m.i32;
  throw DomainError("i_integral: (k,l)=(" + std::to_string(k) + "," + std::to_string(l) + ") unsupported");
}

// int_W^inf w^m e^{-r w} dw for integer m.
double power_exp_tail(int m, double r, double w) {
  double term = 1.0;  // m!/j! (r W)^j / r^{m+1}, summed from j = m down
  double sum = 0.0;
  for (int j = m; j >= 0; --j) {
    sum += term * std::pow(r * w, j);
    term *= j;
  }
  return std::exp(-r * w) * sum / std::pow(r, m + 1);
}

// int_0^inf e^{i w tau} pref e^{-w/wc} w^{l+1} n^k dw, wc = inf for J.
Complex quad_master(int k, int l, double tau, double beta_tilde, double inv_wc, double pref) {
  if (k < 0 || l < 0 || k > 3 || l > 3) throw DomainError("quadrature oracle: k, l must lie in [0, 3]");
  if (k >= l + 2) throw DomainError("quadrature oracle: integrand not integrable at w=0 for k >= l+2");
  const double rate = inv_wc + k * beta_tilde;

  auto envelope = [=](double w) {
    const double n = k == 0 ? 1.0 : std::pow(bose_mean(beta_tilde, w), k);
    return pref * std::exp(-w * inv_wc) * std::pow(w, l + 1) * n;
  };

  quad::Tolerance tol{1e-13, 0.0, 8000};
  double upper = 40.0 / rate;
  const double scale = quad::integrate(envelope, 0.0, 4.0 * upper, tol).value;
  // Extend the range until the analytic tail bound is negligible.
  for (;;) {
    const double c = k == 0 ? 1.0 : 1.0 / -std::expm1(-beta_tilde * upper);
    const double bound = pref * std::pow(c, k) * power_exp_tail(l + 1, rate, upper);
    if (bound <= 1e-15 * scale) break;
    upper *= 1.25;
  }

  if (tau == 0.0) return quad::integrate(envelope, 0.0, upper, tol).value;
  tol.abs = 1e-14 * scale;
  auto f = [&](double w) { return envelope(w) * std::polar(1.0, w * tau); };
  return quad::integrate_complex(f, 0.0, upper, tol).value;
}

}  // namespace

MasterIntegrals master_integrals(double tau, const BathParams& p) {
  const LambdaArg lam(p.beta_tilde(), p.omega_c(), tau);
  return combine(tau, p, lam.value, specfun::hurwitz_zeta(2, lam.value),
                 specfun::hurwitz_zeta(3, lam.value), specfun::hurwitz_zeta(4, lam.value));
}

std::vector<MasterIntegrals> master_integrals_batch(std::span<const double> taus, const BathParams& p) {
  const std::size_t n = taus.size();
  std::vector<double> re(n), im(n);
  for (std::size_t i = 0; i < n; ++i) {
    const LambdaArg lam(p.beta_tilde(), p.omega_c(), taus[i]);
    re[i] = lam.value.real();
    im[i] = lam.value.imag();
  }
  std::vector<double> zr[3], zi[3];
  for (int s = 2; s <= 4; ++s) {
    zr[s - 2].resize(n);
    zi[s - 2].resize(n);
    specfun::hurwitz_zeta_batch(s, re, im, zr[s - 2], zi[s - 2]);
  }
  std::vector<MasterIntegrals> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(combine(taus[i], p, {re[i], im[i]}, {zr[0][i], zi[0][i]}, {zr[1][i], zi[1][i]},
                          {zr[2][i], zi[2][i]}));
  }
  return out;
}

Complex i_integral(int k, int l, double tau, const BathParams& p) {
  pick(MasterIntegrals{}, k, l);  // validate before evaluating zeta
  return pick(master_integrals(tau, p), k, l);
}

void i_integral_batch(int k, int l, std::span<const double> taus, const BathParams& p,
                      std::span<Complex> out) {
  if (out.size() != taus.size()) throw DomainError("i_integral_batch: span lengths differ");
  pick(MasterIntegrals{}, k, l);
  const auto all = master_integrals_batch(taus, p);
  for (std::size_t i = 0; i < all.size(); ++i) out[i] = pick(all[i], k, l);
}

Complex quad_i(int k, int l, double tau, const BathParams& p) {
  return quad_master(k, l, tau, p.beta_tilde(), 1.0 / p.omega_c(), 2.0 * p.alpha() * p.omega_c());
}

double quad_j(int k, int l, double beta_tilde) {
  if (!(beta_tilde > 0.0)) throw DomainError("quad_j: beta_tilde must be > 0");
  if (k < 1) throw DomainError("quad_j: k >= 1 required for convergence");
  return quad_master(k, l, 0.0, beta_tilde, 0.0, 1.0).real();
}

}  // namespace ssbath
