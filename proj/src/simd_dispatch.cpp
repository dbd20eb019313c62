#include "ssbath/simd.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace ssbath::simd {

namespace {

// -1: no override; otherwise static_cast<int>(Level).
std::atomic<int> g_override{-1};

Level from_env(Level fallback) {
  const char* env = std::getenv("SSBATH_SIMD");
  if (env == nullptr) return fallback;
  const std::string value(env);
  if (value == "scalar") return Level::scalar;
  if (value == "avx2") return Level::avx2;
  return fallback;
}

Level clamp(Level requested) {
  const Level best = detected_level();
  return static_cast<int>(requested) > static_cast<int>(best) ? best : requested;
}

}  // namespace

Level detected_level() {
#if defined(SSBATH_HAVE_AVX2_KERNELS) && (defined(__GNUC__) || defined(__clang__))
  static const bool has_avx2 = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  if (has_avx2) return Level::avx2;
#endif
  return Level::scalar;
}

Level active_level() {
  const int forced = g_override.load(std::memory_order_relaxed);
  if (forced >= 0) return clamp(static_cast<Level>(forced));
  static const Level from_environment = clamp(from_env(detected_level()));
  return from_environment;
}

void set_level_override(std::optional<Level> level) {
  g_override.store(level ? static_cast<int>(*level) : -1, std::memory_order_relaxed);
}

std::string_view to_string(Level level) {
  switch (level) {
    case Level::scalar:
      return "scalar";
    case Level::avx2:
      return "avx2";
  }
  return "unknown";
}

}  // namespace ssbath::simd
