#pragma once

#include <span>
#include <vector>

#include "ssbath/specfun.hpp"

namespace ssbath {

/// Ohmic bath parameters. The constructor enforces the small-fluctuation
/// window q in (0.5, 1.5) where the first-order expansion is used.
class BathParams {
 public:
  BathParams(double alpha, double omega_c, double beta_tilde, double q);

  double alpha() const noexcept { return alpha_; }
  double omega_c() const noexcept { return omega_c_; }
  double beta_tilde() const noexcept { return beta_tilde_; }
  double q() const noexcept { return q_; }

  BathParams with_q(double q) const { return {alpha_, omega_c_, beta_tilde_, q}; }
  BathParams with_beta_tilde(double b) const { return {alpha_, omega_c_, b, q_}; }

 private:
  double alpha_;
  double omega_c_;
  double beta_tilde_;
  double q_;
};

// 1 + 1/(beta~ wc) - i tau/beta~. Negative tau gives the conjugate argument.
struct LambdaArg {
  Complex value;

  LambdaArg(double beta_tilde, double omega_c, double tau)
      : value(1.0 + 1.0 / (beta_tilde * omega_c), -tau / beta_tilde) {}
};

double bose_mean(double beta_tilde, double omega);

/// <n^k> of the geometric Bose distribution, k in {1, 2, 3}.
double bose_moment(int k, double beta_tilde, double omega);

double spectral_density(double omega, const BathParams& p);

/// Closed forms of J(k,l) = int w n^k w^l dw for (1,1), (1,2), (2,2).
double j_integral(int k, int l, double beta_tilde);

/// Closed form of I(k,l,tau) = int e^{i w tau} rho(w) n^k w^l dw.
/// Supported: (0,0), (1,0), (1,1), (1,2), (2,1), (2,2), (3,2).
Complex i_integral(int k, int l, double tau, const BathParams& p);

// Every supported I at one tau. They share zeta_{2,3,4}(Lambda).
struct MasterIntegrals {
  Complex i00, i10, i11, i12, i21, i22, i32;
};

MasterIntegrals master_integrals(double tau, const BathParams& p);

/// Batched over tau; goes through the SIMD Hurwitz kernel.
std::vector<MasterIntegrals> master_integrals_batch(std::span<const double> taus, const BathParams& p);

void i_integral_batch(int k, int l, std::span<const double> taus, const BathParams& p,
                      std::span<Complex> out);

// Quadrature of the defining integrals. Test/acceptance oracles only.
// Requires k < l + 2 (otherwise the integrand is not integrable at w=0).
Complex quad_i(int k, int l, double tau, const BathParams& p);
double quad_j(int k, int l, double beta_tilde);

}  // namespace ssbath
