#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace edsim {

/// Purpose-partitioned random streams. Each (seed, replication, purpose)
/// triple yields an independent, reproducible sequence, so adding draws to
/// one purpose never perturbs the others.
enum class RngPurpose : uint32_t {
  Arrivals = 0,
  TriageTags,
  VisitTimes,
  ExamTimes,
  Outcomes,
  TagTransitions,
  Abandonment,
};

inline constexpr int kRngPurposeCount = 7;

namespace detail {
/// SplitMix64 step; used only to spread seed material before feeding the
/// engine so that nearby (seed, rep, purpose) triples decorrelate.
inline uint64_t splitmix64(uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}
}  // namespace detail

/// One random stream. Thin wrapper over mt19937_64 with explicitly coded
/// variate transforms, so sequences are identical across standard libraries.
class RngStream {
 public:
  RngStream(uint64_t seed, uint64_t replication, RngPurpose purpose) {
    uint64_t s = seed;
    detail::splitmix64(s);
    s ^= 0x6a09e667f3bcc909ULL + replication * 0x3c6ef372fe94f82bULL;
    detail::splitmix64(s);
    s ^= 0xbb67ae8584caa73bULL + static_cast<uint64_t>(purpose) * 0xa54ff53a5f1d36f1ULL;
    uint64_t lo = detail::splitmix64(s);
    uint64_t hi = detail::splitmix64(s);
    std::seed_seq seq{static_cast<uint32_t>(lo), static_cast<uint32_t>(lo >> 32),
                      static_cast<uint32_t>(hi), static_cast<uint32_t>(hi >> 32)};
    engine_.seed(seq);
  }

  /// Uniform in [0, 1) with 53 random bits.
  double u01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Uniform in (0, 1]; safe as a log() argument.
  double u01_open() { return 1.0 - u01(); }

  /// Standard normal via Box-Muller (two uniforms per draw, no caching, so
  /// the draw count per sample is fixed).
  double standard_normal() {
    double u1 = u01_open();
    double u2 = u01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

  uint64_t raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace edsim
