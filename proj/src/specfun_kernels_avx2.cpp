// Compiled with -mavx2 -mfma; only reached through runtime dispatch.
#include "ssbath/simd.hpp"

#include <immintrin.h>

#include <algorithm>
#include <array>
#include <cmath>

namespace ssbath::specfun::kernels {

namespace {

struct Cx4 {
  __m256d re;
  __m256d im;
};

inline Cx4 mul(Cx4 a, Cx4 b) {
  return {_mm256_fmsub_pd(a.re, b.re, _mm256_mul_pd(a.im, b.im)),
          _mm256_fmadd_pd(a.re, b.im, _mm256_mul_pd(a.im, b.re))};
}

inline Cx4 reciprocal(Cx4 a) {
  const __m256d d = _mm256_fmadd_pd(a.re, a.re, _mm256_mul_pd(a.im, a.im));
  const __m256d neg = _mm256_sub_pd(_mm256_setzero_pd(), a.im);
  return {_mm256_div_pd(a.re, d), _mm256_div_pd(neg, d)};
}

inline Cx4 ipow(Cx4 base, int e) {
  Cx4 result{_mm256_set1_pd(1.0), _mm256_setzero_pd()};
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

inline Cx4 add(Cx4 a, Cx4 b) { return {_mm256_add_pd(a.re, b.re), _mm256_add_pd(a.im, b.im)}; }

inline Cx4 scale(Cx4 a, double c) {
  const __m256d v = _mm256_set1_pd(c);
  return {_mm256_mul_pd(a.re, v), _mm256_mul_pd(a.im, v)};
}

}  // namespace

void hurwitz_zeta_avx2(int s, std::span<const double> re, std::span<const double> im,
                       std::span<double> out_re, std::span<double> out_im) {
  const std::size_t n = re.size();
  const std::size_t whole = n - n % 4;
  const int target = shift_target(s);

  for (std::size_t i = 0; i < whole; i += 4) {
    const Cx4 z{_mm256_loadu_pd(&re[i]), _mm256_loadu_pd(&im[i])};

    // One shift for all four lanes: the largest any lane needs.
    const double min_re = std::min({re[i], re[i + 1], re[i + 2], re[i + 3]});
    const int shift = min_re >= target ? 0 : static_cast<int>(std::ceil(target - min_re));

    const Cx4 w{_mm256_add_pd(z.re, _mm256_set1_pd(shift)), z.im};
    const Cx4 inv = reciprocal(w);
    const Cx4 inv2 = mul(inv, inv);
    const Cx4 p = ipow(inv, s);

    std::array<Cx4, kEulerMaclaurinTerms> terms;
    Cx4 t = mul(p, inv);
    double rising = s;
    for (int j = 1; j <= kEulerMaclaurinTerms; ++j) {
      terms[j - 1] = scale(t, euler_maclaurin_coefficient(j) * rising);
      t = mul(t, inv2);
      rising *= static_cast<double>(s + 2 * j - 1) * static_cast<double>(s + 2 * j);
    }
    Cx4 sum{_mm256_setzero_pd(), _mm256_setzero_pd()};
    for (int j = kEulerMaclaurinTerms - 1; j >= 0; --j) sum = add(sum, terms[j]);
    sum = add(sum, scale(p, 0.5));
    sum = add(sum, scale(mul(p, w), 1.0 / (s - 1)));

    for (int k = shift - 1; k >= 0; --k) {
      const Cx4 zk{_mm256_add_pd(z.re, _mm256_set1_pd(k)), z.im};
      sum = add(sum, ipow(reciprocal(zk), s));
    }
    _mm256_storeu_pd(&out_re[i], sum.re);
    _mm256_storeu_pd(&out_im[i], sum.im);
  }

  if (whole < n) {
    hurwitz_zeta_scalar(s, re.subspan(whole), im.subspan(whole), out_re.subspan(whole),
                        out_im.subspan(whole));
  }
}

}  // namespace ssbath::specfun::kernels
