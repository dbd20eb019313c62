#include "ssbath/simd.hpp"

#include <array>
#include <cmath>

namespace ssbath::specfun::kernels {

namespace {

constexpr std::array<double, kEulerMaclaurinTerms> kBernoulli2j = {
    1.0 / 6.0,     -1.0 / 30.0,      1.0 / 42.0,       -1.0 / 30.0,
    5.0 / 66.0,    -691.0 / 2730.0,  7.0 / 6.0,        -3617.0 / 510.0,
    43867.0 / 798.0, -174611.0 / 330.0, 854513.0 / 138.0, -236364091.0 / 2730.0,
};

constexpr std::array<double, kEulerMaclaurinTerms> make_coefficients() {
  std::array<double, kEulerMaclaurinTerms> c{};
  double factorial = 1.0;
  int n = 0;
  for (int j = 1; j <= kEulerMaclaurinTerms; ++j) {
    while (n < 2 * j) {
      ++n;
      factorial *= n;
    }
    c[j - 1] = kBernoulli2j[j - 1] / factorial;
  }
  return c;
}

constexpr auto kCoefficients = make_coefficients();

struct Cx {
  double re;
  double im;
};

inline Cx mul(Cx a, Cx b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }

inline Cx reciprocal(Cx a) {
  const double d = a.re * a.re + a.im * a.im;
  return {a.re / d, -a.im / d};
}

inline Cx ipow(Cx base, int e) {
  Cx result{1.0, 0.0};
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Cx hurwitz_one(int s, Cx z) {
  const int target = shift_target(s);
  const int shift = z.re >= target ? 0 : static_cast<int>(std::ceil(target - z.re));

  const Cx w{z.re + shift, z.im};
  const Cx inv = reciprocal(w);
  const Cx inv2 = mul(inv, inv);
  const Cx p = ipow(inv, s);  // w^{-s}

  // Euler-Maclaurin remainder, smallest terms first.
  std::array<Cx, kEulerMaclaurinTerms> terms{};
  Cx t = mul(p, inv);  // w^{-s-1}
  double rising = s;   // s (s+1) ... (s+2j-2)
  for (int j = 1; j <= kEulerMaclaurinTerms; ++j) {
    const double c = kCoefficients[j - 1] * rising;
    terms[j - 1] = {c * t.re, c * t.im};
    t = mul(t, inv2);
    rising *= static_cast<double>(s + 2 * j - 1) * static_cast<double>(s + 2 * j);
  }
  Cx sum{0.0, 0.0};
  for (int j = kEulerMaclaurinTerms - 1; j >= 0; --j) {
    sum.re += terms[j].re;
    sum.im += terms[j].im;
  }
  sum.re += 0.5 * p.re;
  sum.im += 0.5 * p.im;
  const Cx lead = mul(p, w);
  sum.re += lead.re / (s - 1);
  sum.im += lead.im / (s - 1);

  for (int k = shift - 1; k >= 0; --k) {
    const Cx term = ipow(reciprocal({z.re + k, z.im}), s);
    sum.re += term.re;
    sum.im += term.im;
  }
  return sum;
}

}  // namespace

double euler_maclaurin_coefficient(int j) { return kCoefficients[j - 1]; }

int shift_target(int s) { return s * 2 > 10 ? s * 2 : 10; }

void hurwitz_zeta_scalar(int s, std::span<const double> re, std::span<const double> im,
                         std::span<double> out_re, std::span<double> out_im) {
  for (std::size_t i = 0; i < re.size(); ++i) {
    const Cx v = hurwitz_one(s, {re[i], im[i]});
    out_re[i] = v.re;
    out_im[i] = v.im;
  }
}

}  // namespace ssbath::specfun::kernels
