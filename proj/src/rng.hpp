#pragma once

#include <bit>
#include <cstdint>
#include <random>

namespace netctrl {

/// Finalizer of the splitmix64 generator; a strong 64-bit bit mixer.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Derives the seed of one trial from (base seed, grid value, trial index)
/// by chained splitmix64 mixing. This is the documented, stable contract
/// that makes sweeps reproducible independent of execution order: every
/// (scenario seed, parameter, trial) triple owns its own random stream.
inline std::uint64_t derive_trial_seed(std::uint64_t base_seed, double parameter,
                                       std::uint64_t trial_index) {
  std::uint64_t h = splitmix64(base_seed);
  h = splitmix64(h ^ std::bit_cast<std::uint64_t>(parameter));
  h = splitmix64(h ^ trial_index);
  return h;
}

/// Seeded random stream with platform-independent output.
///
/// mt19937_64 is fully specified by the standard, and every derived draw
/// below is built from its raw 64-bit output with fixed arithmetic, so the
/// same seed yields bit-identical networks on any conforming toolchain.
/// (std::uniform_real_distribution makes no such guarantee.)
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on the open interval (0, 1): (k + 1/2) / 2^53 with k in [0, 2^53).
  /// Strictly positive, strictly below one, mean exactly 1/2.
  double uniform01() {
    const std::uint64_t k = engine_() >> 11;
    return (static_cast<double>(k) + 0.5) * 0x1.0p-53;
  }

  /// Uniform on (-amplitude, +amplitude), symmetric around zero.
  double symmetric(double amplitude) { return amplitude * (2.0 * uniform01() - 1.0); }

  /// Unbiased integer in [0, bound) via Lemire's multiply-shift rejection.
  std::uint64_t uniform_index(std::uint64_t bound) {
    std::uint64_t x = engine_();
    __uint128_t m = static_cast<__uint128_t>(x) * bound;
    auto lo = static_cast<std::uint64_t>(m);
    if (lo < bound) {
      const std::uint64_t threshold = -bound % bound;
      while (lo < threshold) {
        x = engine_();
        m = static_cast<__uint128_t>(x) * bound;
        lo = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace netctrl
