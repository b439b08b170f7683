#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace shepard {

// Counter-based generator: every draw is addressed by an explicit 64-bit
// counter, so parallel loops can consume disjoint counter ranges and produce
// output independent of thread count and scheduling. The stream is the
// SplitMix64 sequence of the hashed seed.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : base_(mix(seed ^ 0x5851f42d4c957f2dULL)) {}

  static std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  std::uint64_t bits(std::uint64_t ctr) const {
    return mix(base_ + ctr * 0x9e3779b97f4a7c15ULL);
  }

  // Uniform in the open interval (0, 1); never returns an exact endpoint.
  double uniform(std::uint64_t ctr) const {
    return (static_cast<double>(bits(ctr) >> 11) + 0.5) * 0x1p-53;
  }

  // Standard normal pair via Box-Muller; consumes counters ctr and ctr + 1.
  void gaussian_pair(std::uint64_t ctr, double& g0, double& g1) const {
    const double u1 = uniform(ctr);
    const double u2 = uniform(ctr + 1);
    const double rad = std::sqrt(-2.0 * std::log(u1));
    const double ang = 2.0 * std::numbers::pi * u2;
    g0 = rad * std::cos(ang);
    g1 = rad * std::sin(ang);
  }

 private:
  std::uint64_t base_;
};

// Counters consumed by one uniform-in-ball sample in dimension d.
inline int ball_sample_draws(int d) { return 2 * ((d + 1) / 2) + 1; }

// Uniform sample in the unit ball of R^d: Gaussian direction scaled by
// u^{1/d}. Consumes ball_sample_draws(d) counters starting at ctr0.
inline void sample_unit_ball(const CounterRng& rng, int d, std::uint64_t ctr0,
                             double* out) {
  double norm_sq = 0.0;
  std::uint64_t ctr = ctr0;
  for (int k = 0; k < d; k += 2) {
    double g0, g1;
    rng.gaussian_pair(ctr, g0, g1);
    ctr += 2;
    out[k] = g0;
    if (k + 1 < d) out[k + 1] = g1;
  }
  for (int k = 0; k < d; ++k) norm_sq += out[k] * out[k];
  const double u = rng.uniform(ctr0 + 2 * ((d + 1) / 2));
  const double norm = std::sqrt(norm_sq);
  const double scale = norm > 0.0 ? std::pow(u, 1.0 / d) / norm : 0.0;
  for (int k = 0; k < d; ++k) out[k] *= scale;
}

// Convenience wrapper for sequential consumers (generators, shuffles).
class SequentialRng {
 public:
  explicit SequentialRng(std::uint64_t seed) : rng_(seed) {}

  double uniform() { return rng_.uniform(ctr_++); }
  double uniform(double a, double b) { return a + (b - a) * uniform(); }
  std::uint64_t bits() { return rng_.bits(ctr_++); }

 private:
  CounterRng rng_;
  std::uint64_t ctr_ = 0;
};

}  // namespace shepard
