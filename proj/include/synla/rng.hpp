#ifndef SYNLA_RNG_HPP
#define SYNLA_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>

namespace synla {

/// Seeded random source. The engine is std::mt19937_64 (bit-exact by the
/// standard); the distributions are derived here from raw 64-bit draws so
/// identical seeds give bit-identical streams on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal via Box-Muller.
  double gaussian() {
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log1p(-u1));
    return r * std::cos(6.283185307179586 * u2);
  }

  /// Uniform integer in [lo, hi] inclusive.
  int uniform_int(int lo, int hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(engine_() % span);
  }

  std::uint64_t raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace synla

#endif  // SYNLA_RNG_HPP
