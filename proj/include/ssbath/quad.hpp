#pragma once

#include <complex>
#include <cstddef>
#include <functional>

namespace ssbath::quad {

struct Estimate {
  double value = 0.0;
  double error = 0.0;
};

struct ComplexEstimate {
  std::complex<double> value;
  double error = 0.0;
};

struct Tolerance {
  double rel = 1e-12;
  double abs = 0.0;
  std::size_t max_intervals = 4000;
};

/// Adaptive Gauss-Kronrod (21-point) integration of f over [a, b].
/// Throws NumericError (carrying the estimate and bound) when the requested
/// tolerance cannot be met within max_intervals subdivisions.
Estimate integrate(const std::function<double(double)>& f, double a, double b, Tolerance tol = {});

/// Real and imaginary parts integrated separately with the same tolerance.
ComplexEstimate integrate_complex(const std::function<std::complex<double>(double)>& f, double a, double b,
                          Tolerance tol = {});

}  // namespace ssbath::quad
