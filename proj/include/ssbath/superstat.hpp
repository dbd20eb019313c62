#pragma once

#include <span>
#include <vector>

#include "ssbath/bath.hpp"

namespace ssbath {

/// Gamma distribution of inverse temperatures, scale b and shape c.
struct GammaDist {
  double b;
  double c;

  GammaDist(double scale, double shape);

  double mean() const noexcept { return b * c; }
  double variance() const noexcept { return b * b * c; }

  // Mean beta, shape 1/(q-1). Requires q > 1.
  static GammaDist from_tsallis(double beta, double q);
};

/// Standard normalized density (1/(b Gamma(c))) (x/b)^{c-1} e^{-x/b}.
double gamma_pdf(const GammaDist& d, double beta_bar);

/// [1 + (1-q) x]^{1/(1-q)}; DomainError outside the Tsallis support.
double q_exp(double x, double q);

/// Gamma average of e^{-beta_bar E} by quadrature (q > 1 only).
double ss_boltzmann_scalar(double beta, double q, double energy);

double q_from_sigma(double sigma, double beta);

// First-order (q-1) correlation pieces for the Ohmic continuum.
Complex corr_n(double tau, const BathParams& p);
double corr_d(const BathParams& p);  // ValidityError when <= 0
Complex corr_m(double tau, const BathParams& p);

struct CorrelationSample {
  double tau;
  Complex c_q;
  Complex c_q_star;
  Complex c_eq;
};

CorrelationSample correlation(double tau, const BathParams& p);

/// Same as correlation() over a tau grid, in grid order.
std::vector<CorrelationSample> correlation_sweep(std::span<const double> taus, const BathParams& p);

// Discrete-mode analogues of N and D (same algebra, finite sums instead of
// integrals). kappas are coupling magnitudes |k_j|.
Complex discrete_corr_n(std::span<const double> omegas, std::span<const double> kappas,
                        double beta_tilde, double q, double tau);
double discrete_corr_d(std::span<const double> omegas, double beta_tilde, double q);

}  // namespace ssbath
