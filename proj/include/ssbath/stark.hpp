#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "ssbath/quad.hpp"

namespace ssbath {

struct StarkParams {
  double y;
  double theta = 0.0;
  double q = 1.0;
  double prefactor = 1.0;
};

struct PvOptions {
  double tol = 1e-10;
  std::optional<double> delta;  // half-width of the paired window; min(pole,1)/2 by default
};

/// Principal value of int_0^upper f(x) dx where f has a simple pole at `pole`.
/// On [pole-d, pole+d] the points pole +- u are paired so the singular parts
/// cancel inside one integrand evaluation.
quad::Estimate pv_integrate(const std::function<double(double)>& f, double pole, double upper,
                            const PvOptions& opts = {});

/// Thermal AC Stark function F(y, T~, V) in units of the prefactor.
double stark_f(const StarkParams& p);

struct RootScan {
  double y_min = 0.1;
  double y_max = 30.0;
  int points = 300;  // log spaced
};

/// Every sign change of F(y) on the scan window, refined by bisection to 1e-6.
std::vector<double> critical_roots(double q, double theta, const RootScan& scan = {});

/// First root, if the window holds one.
std::optional<double> critical_y(double q, double theta, const RootScan& scan = {});

}  // namespace ssbath
