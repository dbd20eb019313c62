#include "ssbath/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "ssbath/error.hpp"
#include "ssbath/simd.hpp"

namespace ssbath::specfun {

namespace {

constexpr int kMaxOrder = 32;

void check_order(int s) {
  if (s < 2 || s > kMaxOrder) {
    throw DomainError("hurwitz_zeta: order s=" + std::to_string(s) + " outside [2, 32]");
  }
}

void check_argument(double re) {
  if (!(re > 0.0)) {
    throw DomainError("hurwitz_zeta: requires Re z > 0, got " + std::to_string(re));
  }
}

Complex finite_or_throw(Complex v, const char* who) {
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
    throw NumericError(std::string(who) + ": result overflowed", 0.0,
                       std::numeric_limits<double>::infinity());
  }
  return v;
}

}  // namespace

Complex hurwitz_zeta(int s, Complex z) {
  check_order(s);
  check_argument(z.real());
  const double re = z.real();
  const double im = z.imag();
  double out_re = 0.0;
  double out_im = 0.0;
  kernels::hurwitz_zeta_scalar(s, {&re, 1}, {&im, 1}, {&out_re, 1}, {&out_im, 1});
  return finite_or_throw({out_re, out_im}, "hurwitz_zeta");
}

double riemann_zeta(int s) {
  if (s < 2) throw DomainError("riemann_zeta: requires s >= 2, got " + std::to_string(s));
  return hurwitz_zeta(s, 1.0).real();
}

Complex polygamma(int m, Complex z) {
  static constexpr std::array<double, 4> kSignedFactorial = {0.0, 1.0, -2.0, 6.0};
  if (m < 1 || m > 3) throw DomainError("polygamma: order m=" + std::to_string(m) + " unsupported");
  return kSignedFactorial[m] * hurwitz_zeta(m + 1, z);
}

void hurwitz_zeta_batch(int s, std::span<const double> re, std::span<const double> im,
                        std::span<double> out_re, std::span<double> out_im) {
  check_order(s);
  if (im.size() != re.size() || out_re.size() != re.size() || out_im.size() != re.size()) {
    throw DomainError("hurwitz_zeta_batch: span lengths differ");
  }
  for (double x : re) check_argument(x);

  switch (simd::active_level()) {
#if defined(SSBATH_HAVE_AVX2_KERNELS)
    case simd::Level::avx2:
      kernels::hurwitz_zeta_avx2(s, re, im, out_re, out_im);
      break;
#endif
    default:
      kernels::hurwitz_zeta_scalar(s, re, im, out_re, out_im);
      break;
  }
  for (std::size_t i = 0; i < re.size(); ++i) {
    finite_or_throw({out_re[i], out_im[i]}, "hurwitz_zeta_batch");
  }
}

}  // namespace ssbath::specfun
