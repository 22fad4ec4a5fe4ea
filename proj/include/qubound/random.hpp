#pragma once

// Deterministic random helpers. std::normal_distribution is
// implementation-defined, so Gaussians come from a hand-rolled Box-Muller
// transform over mt19937_64; results are identical across platforms.

#include <cmath>
#include <cstdint>
#include <random>

namespace qubound {

// splitmix64-style finalizer; combines a base seed with stream indices so
// per-instance and per-restart streams never collide.
inline std::uint64_t mix_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (a + 1) + 0x94d049bb133111ebULL * (b + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

class GaussianStream {
 public:
  explicit GaussianStream(std::uint64_t seed) : engine_(seed) {}

  double next() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    // uniform draws in (0, 1]; the +1 keeps log() away from zero
    const double u1 = ((engine_() >> 11) + 1) * 0x1.0p-53;
    const double u2 = ((engine_() >> 11) + 1) * 0x1.0p-53;
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * M_PI * u2;
    spare_ = r * std::sin(angle);
    have_spare_ = true;
    return r * std::cos(angle);
  }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace qubound
