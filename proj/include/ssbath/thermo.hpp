#pragma once

#include <optional>
#include <span>
#include <vector>

namespace ssbath {

// Equilibrium energy cumulants of the bath at inverse temperature beta~.
// All thermodynamic quantities below are densities in wc = 1 units.
struct EnergyCumulants {
  double beta_tilde;
  double log_z;  // -sum ln(1 - e^{-b w})
  double k1;     // <H>
  double k2;     // <H^2> - <H>^2
  double k3;     // third cumulant

  static EnergyCumulants ohmic(double beta_tilde);
  static EnergyCumulants discrete(std::span<const double> omegas, double beta_tilde);
};

double equilibrium_entropy(const EnergyCumulants& c);

// First order in (q-1).
double internal_energy(const EnergyCumulants& c, double q);
double tsallis_entropy(const EnergyCumulants& c, double q);
double trace_rho_q(const EnergyCumulants& c, double q);      // NumericError if <= 0
double escort_energy_trace(const EnergyCumulants& c, double q);  // Tr[rho^q H]
double renormalized_beta(const EnergyCumulants& c, double q);    // ValidityError on bad denominator

// Ohmic-bath shorthands.
double internal_energy(double beta_tilde, double q);
double tsallis_entropy(double beta_tilde, double q);
double trace_rho_q(double beta_tilde, double q);
double renormalized_beta(double beta_tilde, double q);

struct ThermoPoint {
  double beta_tilde;
  double q;
  double u;
  double s;
  double trace_rho_q;
  std::optional<double> beta_physical;
  bool physical;
};

/// U and S along an ascending beta~ grid with the physical-temperature gate.
/// The curve is walked from the largest beta~ (the equilibrium-connected,
/// low-temperature end) toward hotter points; the first point with
/// dU/dbeta~ >= 0, dS/dU <= 0, a fold in U, or an invalid beta discards it
/// and everything hotter.
std::vector<ThermoPoint> su_plane(double q, std::span<const double> beta_tilde_grid);

struct TempMapEntry {
  double t_tilde;
  std::optional<double> t_physical;
};

/// T = 1/beta(beta~) on the gated grid; entries keep input order.
std::vector<TempMapEntry> temp_map(double q, std::span<const double> t_tilde_grid);

}  // namespace ssbath
