#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace frontiers::sim {

/// Deterministic random source. mt19937 output is specified by the
/// standard, and the distributions are hand-rolled (std:: distributions are
/// implementation-defined), so identical seeds give identical runs on any
/// platform.
class Rng {
 public:
  explicit Rng(std::uint32_t seed) : gen_(seed) {}

  /// Uniform in [0, 1).
  double uniform01() { return gen_() * (1.0 / 4294967296.0); }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Box-Muller, one value per call.
  double gaussian(double mean, double sigma) {
    double u1 = uniform01();
    while (u1 <= 0.0) u1 = uniform01();
    const double u2 = uniform01();
    return mean + sigma * std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

 private:
  std::mt19937 gen_;
};

}  // namespace frontiers::sim
