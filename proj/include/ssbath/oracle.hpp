#pragma once

#include <span>
#include <utility>
#include <vector>

#include "ssbath/specfun.hpp"

namespace ssbath::oracle {

/// Finite set of harmonic modes with per-mode occupation truncation.
struct DiscreteBath {
  std::vector<double> omegas;
  std::vector<double> kappas;
  int n_max = 50;

  DiscreteBath(std::vector<double> omegas, std::vector<double> kappas, int n_max);

  // w = {0.7, 1.0, 1.9}, |k| = 1, n_max = 50.
  static DiscreteBath standard();

  /// ConfigError unless e^{-beta min(w) n_max} < 1e-12.
  void check_truncation(double beta) const;

  std::size_t modes() const noexcept { return omegas.size(); }
};

enum class Observable { one, energy, energy_sq, number, energy_number, energy_sq_number };

enum class TracePath { direct, geometric };

/// Tr[e^{-beta H} O]. `mode` selects j for the number-operator observables.
/// direct: nested sum over the truncated Fock space. geometric: per-mode
/// closed forms (untruncated).
double exact_trace(const DiscreteBath& b, double beta, Observable obs, std::size_t mode = 0,
                   TracePath path = TracePath::direct);

enum class QPath { q_exponential, gamma_average };

// Exact traces with rho ~ e_q(-beta~ H). Unnormalized pieces are divided by
// prod_k Z_k (equilibrium partition functions) as in the first-order algebra.
struct ExactTraces {
  Complex n;                // sum_j |k_j|^2 e^{i w_j tau} Tr[e_q^q n_j] / Z_eq
  double d;                 // Tr[e_q^q] / Z_eq
  Complex c;                // n / d
  double u;                 // Tr[e_q^q H] / Tr[e_q^q]
  double s;                 // (1 - Tr[rho^q]) / (q - 1)
  double trace_rho_q;       // Tr[rho^q], rho = e_q / Tr[e_q]
  double escort_energy;     // Tr[rho^q H]
};

/// q_exponential: direct sum over configurations (DomainError outside the
/// Tsallis support). gamma_average (q > 1): the q-exponential powers written
/// as Laplace transforms of gamma densities, integrated against the
/// untruncated geometric traces.
ExactTraces exact_traces(const DiscreteBath& b, double beta_tilde, double q, double tau,
                         QPath path = QPath::q_exponential);

Complex exact_correlation(const DiscreteBath& b, double beta_tilde, double q, double tau,
                          QPath path = QPath::q_exponential);

/// Per level: gamma average by quadrature in log(beta_bar), and q_exp(-beta E, q).
std::pair<std::vector<double>, std::vector<double>> gamma_average_check(double beta, double q,
                                                                        std::span<const double> energies);

}  // namespace ssbath::oracle
