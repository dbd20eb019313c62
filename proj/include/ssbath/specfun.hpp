#pragma once

#include <complex>
#include <span>

namespace ssbath {

using Complex = std::complex<double>;

namespace specfun {

/// Riemann zeta at integer s >= 2.
double riemann_zeta(int s);

/// Hurwitz zeta sum_{n>=0} (n+z)^{-s} for integer s in [2, 32] and Re z > 0.
///
/// The argument is shifted with zeta_s(z) = zeta_s(z+1) + z^{-s} until
/// Re z >= max(10, 2s); the remainder is the Euler-Maclaurin expansion.
/// Relative accuracy is ~1e-14 for the |Im z| <= 1e3 range used by the
/// bath integrals. Throws DomainError on Re z <= 0 or unsupported s.
Complex hurwitz_zeta(int s, Complex z);

/// Polygamma psi_m(z) for m in {1, 2, 3} via (-1)^{m+1} m! zeta_{m+1}(z).
Complex polygamma(int m, Complex z);

/// Batched Hurwitz zeta over structure-of-arrays input.
///
/// out_re/out_im receive zeta_s(re[i] + i*im[i]). All spans must have equal
/// length. Dispatches to the widest kernel the running CPU supports; results
/// agree with hurwitz_zeta() to ~1e-14 relative.
void hurwitz_zeta_batch(int s, std::span<const double> re, std::span<const double> im,
                        std::span<double> out_re, std::span<double> out_im);

}  // namespace specfun
}  // namespace ssbath
