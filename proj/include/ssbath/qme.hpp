#pragma once

#include <vector>

#include "ssbath/specfun.hpp"

namespace ssbath {

struct AtomParams {
  double y;        // hbar w_A / k_B T~
  double gamma0;   // spontaneous emission rate
  double theta;    // cavity parameter
  double q;
  double omega_a;  // sets the unitary rotation of the coherence

  void validate() const;
};

struct DensityMatrix2 {
  double rho_ee = 0.0;
  double rho_gg = 1.0;
  Complex rho_eg = 0.0;

  double trace() const noexcept { return rho_ee + rho_gg; }
  double min_eigenvalue() const;
};

/// (pi^2 V / 15) T~^3 in natural units.
double cavity_theta(double volume, double t_tilde);

/// 1 + ((q-1)/2) Theta (Theta + 2); ValidityError if <= 0.
double d_tv(double theta, double q);

double cal_f(double y, double theta);
double cal_g(double y, double theta);

struct Rates {
  double gamma1;
  double gamma2;
};

/// Emission/absorption rates; ValidityError if gamma1 <= 0 or gamma2 < 0.
Rates rates(const AtomParams& p);

DensityMatrix2 steady_state(const Rates& r);

/// Time derivative of rho. `shift` is an optional external correction added to omega_a.
DensityMatrix2 lindblad_rhs(const DensityMatrix2& rho, const AtomParams& p, double gamma1, double gamma2,
                            double shift = 0.0);

struct TrajectorySample {
  double t;
  DensityMatrix2 rho;
};

struct EvolveOptions {
  double shift = 0.0;
  int sample_every = 1;  // record every n-th step (first and last always kept)
};

/// Fixed-step RK4. ConfigError unless dt <= 0.05/(G1+G2) and dt <= 0.05/omega_a.
std::vector<TrajectorySample> evolve(const DensityMatrix2& rho0, const AtomParams& p, double t_max, double dt,
                                     const EvolveOptions& opts = {});

}  // namespace ssbath
