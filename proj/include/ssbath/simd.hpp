#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>

namespace ssbath::simd {

enum class Level { scalar, avx2 };

/// Widest level both compiled in and supported by the running CPU.
Level detected_level();

/// Level used by dispatching kernels: the override if set, else the
/// SSBATH_SIMD environment variable ("scalar" / "avx2"), else detected_level().
/// Requests above detected_level() fall back to it.
Level active_level();

void set_level_override(std::optional<Level> level);

std::string_view to_string(Level level);

}  // namespace ssbath::simd

namespace ssbath::specfun::kernels {

// Raw kernels behind hurwitz_zeta_batch(). No argument validation; callers
// guarantee Re z > 0, 2 <= s <= 32 and equal span lengths.
void hurwitz_zeta_scalar(int s, std::span<const double> re, std::span<const double> im,
                         std::span<double> out_re, std::span<double> out_im);

#if defined(SSBATH_HAVE_AVX2_KERNELS)
void hurwitz_zeta_avx2(int s, std::span<const double> re, std::span<const double> im,
                       std::span<double> out_re, std::span<double> out_im);
#endif

// Shared between kernels so both variants run the same expansion.
inline constexpr int kEulerMaclaurinTerms = 12;
double euler_maclaurin_coefficient(int j);  // B_{2j} / (2j)!, j = 1..12
int shift_target(int s);                    // Z0 = max(10, 2s)

}  // namespace ssbath::specfun::kernels
