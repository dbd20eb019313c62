#include "ssbath/stark.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ssbath/bath.hpp"
#include "ssbath/error.hpp"
#include "ssbath/qme.hpp"

namespace ssbath {

quad::Estimate pv_integrate(const std::function<double(double)>& f, double pole, double upper,
                            const PvOptions& opts) {
  if (!(pole > 0.0 && pole < upper)) throw DomainError("pv_integrate: pole must lie in (0, upper)");
  const double delta = opts.delta.value_or(std::min(pole, 1.0) / 2.0);
  if (!(delta > 0.0) || pole - delta < 0.0 || pole + delta > upper) {
    throw DomainError("pv_integrate: paired window does not fit inside [0, upper]");
  }
  const quad::Tolerance tol{opts.tol, 0.0, 4000};
  const auto left = quad::integrate(f, 0.0, pole - delta, tol);
  const auto right = quad::integrate(f, pole + delta, upper, tol);
  // The paired piece may cancel to ~0 (odd integrands); bound it absolutely
  // against the outer pieces.
  const quad::Tolerance pair_tol{opts.tol, opts.tol * (std::abs(left.value) + std::abs(right.value)), 4000};
  const auto paired =
      quad::integrate([&](double u) { return f(pole + u) + f(pole - u); }, 0.0, delta, pair_tol);
  return {left.value + paired.value + right.value, left.error + paired.error + right.error};
}

namespace {

// n + (e/4)[...] from the F(y) integrand. Guarded so that x -> 0 and large x
// never evaluate n at an invalid point.
double occupation_bracket(double x, double e, double theta) {
  const double n = x > 700.0 ? 0.0 : bose_mean(1.0, x);
  const double nn = n * (n + 1.0);
  const double inner = x * x * nn - 2.0 * x * n + 2.0 * x * x * nn * (2.0 * n + 1.0) - 4.0 * x * nn +
                       theta * (2.0 * x * nn + 4.0 * n + 2.0 * theta * n);
  return n + 0.25 * e * inner;
}

// Bound on int_L^inf |integrand| dx, using |x^3 (1/(y-x)+1/(y+x))| <= y x^2/20
// for x >= 40 + y and n <= c e^{-x} with c = 1/(1 - e^{-L}).
double tail_bound(double y, double e, double theta, double lower) {
  const double c = 1.0 / -std::expm1(-lower);
  auto moment = [lower](int m) {  // int_L^inf x^m e^{-x}
    double term = 1.0, sum = 0.0;
    for (int j = m; j >= 0; --j) {
      sum += term * std::pow(lower, j);
      term *= j;
    }
    return std::exp(-lower) * sum;
  };
  const double ae = std::abs(e);
  const double nn = c * (1.0 + c);
  // Bracket bound grouped by powers x^0, x^1, x^2 (each times e^{-x}).
  const double m1 = 0.25 * ae * (2.0 * c + 4.0 * nn + 2.0 * theta * nn);
  const double m2 = 0.25 * ae * (nn + 2.0 * nn * (1.0 + 2.0 * c));
  const double m0 = c + 0.25 * ae * (4.0 * theta * c + 2.0 * theta * theta * c);
  return y / 20.0 * (m0 * moment(2) + m1 * moment(3) + m2 * moment(4));
}

}  // namespace

double stark_f(const StarkParams& p) {
  if (!(p.y > 0.0)) throw DomainError("stark_f: y must be > 0");
  if (p.theta < 0.0) throw DomainError("stark_f: theta must be >= 0");
  if (!(p.prefactor > 0.0)) throw DomainError("stark_f: prefactor must be > 0");
  const double dtv = d_tv(p.theta, p.q);
  const double e = p.q - 1.0;
  const double y = p.y;
  auto integrand = [=](double x) {
    return x * x * x * (1.0 / (y - x) + 1.0 / (y + x)) * occupation_bracket(x, e, p.theta);
  };
  const double upper = 40.0 + y;
  const PvOptions opts{1e-11, std::nullopt};
  const auto est = pv_integrate(integrand, y, upper, opts);
  const double tail = tail_bound(y, e, p.theta, upper);
  if (tail > 1e-9 * std::max(1.0, std::abs(est.value))) {
    throw NumericError("stark_f: tail beyond x = 40 + y exceeds tolerance", est.value, tail);
  }
  return p.prefactor * est.value / dtv;
}

std::vector<double> critical_roots(double q, double theta, const RootScan& scan) {
  if (!(scan.y_min > 0.0 && scan.y_max > scan.y_min) || scan.points < 2) {
    throw DomainError("critical_roots: invalid scan window");
  }
  auto f = [&](double y) { return stark_f({y, theta, q, 1.0}); };
  const double ratio = std::log(scan.y_max / scan.y_min) / (scan.points - 1);
  std::vector<double> roots;
  double ya = scan.y_min;
  double fa = f(ya);
  for (int i = 1; i < scan.points; ++i) {
    const double yb = i == scan.points - 1 ? scan.y_max : scan.y_min * std::exp(ratio * i);
    const double fb = f(yb);
    if (fa == 0.0) {
      roots.push_back(ya);
    } else if (std::signbit(fa) != std::signbit(fb) && fb != 0.0) {
      double lo = ya, hi = yb, flo = fa;
      while (hi - lo > 1e-6) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (std::signbit(fm) == std::signbit(flo)) {
          lo = mid;
          flo = fm;
        } else {
          hi = mid;
        }
      }
      roots.push_back(0.5 * (lo + hi));
    }
    ya = yb;
    fa = fb;
  }
  if (fa == 0.0) roots.push_back(ya);
  return roots;
}

std::optional<double> critical_y(double q, double theta, const RootScan& scan) {
  const auto roots = critical_roots(q, theta, scan);
  if (roots.empty()) return std::nullopt;
  return roots.front();
}

}  // namespace ssbath
