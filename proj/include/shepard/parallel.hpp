#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "shepard/rng.hpp"

// Data-parallel inner loops, each in two builds: a plain serial reference and
// an OpenMP version. Every pair is bit-identical by construction — the
// parallel loops split over probes/samples only, and the reductions involved
// (min, max, integer sums) are order-independent — so the tests compare them
// exactly and the bench target compares their speed.
namespace shepard::par {

inline double dist_sq(const double* a, const double* b, int d) {
  double acc = 0.0;
  for (int k = 0; k < d; ++k) {
    const double diff = a[k] - b[k];
    acc += diff * diff;
  }
  return acc;
}

// ---- minimum pairwise squared distance -----------------------------------

double min_pairwise_sq_serial(const double* pts, std::size_t n, int d);
double min_pairwise_sq_parallel(const double* pts, std::size_t n, int d);
// Grid-bucketed exact version (per-point nearest-neighbor ring search).
double min_pairwise_sq_bucketed(const double* pts, std::size_t n, int d);

// ---- nearest-site queries --------------------------------------------------

// Uniform bucket grid over a fixed point cloud; answers exact nearest-site
// squared distances via expanding ring search.
class NeighborGrid {
 public:
  // cell_hint <= 0 picks a cell size from the average point spacing.
  NeighborGrid(const double* pts, std::size_t n, int d, double cell_hint = 0.0);

  // Exact squared distance from q to the nearest site (excluding the site
  // with index `exclude` when >= 0).
  double nearest_sq(const double* q, std::ptrdiff_t exclude = -1) const;

  double cell_size() const { return cell_; }

 private:
  const double* pts_;
  std::size_t n_;
  int d_;
  double cell_;
  std::vector<double> lo_;
  std::vector<int> dims_;
  std::vector<std::uint32_t> start_;  // CSR cell layout
  std::vector<std::uint32_t> order_;

  std::size_t cell_index(const int* coord) const;
};

void nearest_site_sq_serial(const double* sites, std::size_t n, int d,
                            const double* probes, std::size_t m, double* out);
void nearest_site_sq_parallel(const NeighborGrid& grid, int d,
                              const double* probes, std::size_t m, double* out);

double max_of(const double* values, std::size_t m);

// ---- Shepard sweeps ---------------------------------------------------------

// Rational-formation sweep: at each probe x accumulate
//   den = sum_i profile(beta^2 |x - y_i|^2),  num = sum_i values[i] * (...)
// and store num/den (when values given) and den. cutoff_scaled limits the
// scaled distance |beta (x - y)|; pass +inf for the exact sum.
template <class Profile>
void shepard_sweep_serial(const double* sites, std::size_t n, int d,
                          const double* values, const double* probes,
                          std::size_t m, double beta, double cutoff_scaled,
                          const Profile& profile, double* out_value,
                          double* out_sum) {
  const double b2 = beta * beta;
  const double cut2 = cutoff_scaled * cutoff_scaled;
  for (std::size_t p = 0; p < m; ++p) {
    const double* x = probes + p * d;
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double u = b2 * dist_sq(x, sites + i * d, d);
      if (u > cut2) continue;
      const double w = profile(u);
      den += w;
      if (values) num += values[i] * w;
    }
    if (out_sum) out_sum[p] = den;
    if (out_value) out_value[p] = values ? num / den : 0.0;
  }
}

template <class Profile>
void shepard_sweep_parallel(const double* sites, std::size_t n, int d,
                            const double* values, const double* probes,
                            std::size_t m, double beta, double cutoff_scaled,
                            const Profile& profile, double* out_value,
                            double* out_sum) {
  const double b2 = beta * beta;
  const double cut2 = cutoff_scaled * cutoff_scaled;
#pragma omp parallel for schedule(static)
  for (long long p = 0; p < static_cast<long long>(m); ++p) {
    const double* x = probes + p * d;
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double u = b2 * dist_sq(x, sites + i * d, d);
      if (u > cut2) continue;
      const double w = profile(u);
      den += w;
      if (values) num += values[i] * w;
    }
    if (out_sum) out_sum[p] = den;
    if (out_value) out_value[p] = values ? num / den : 0.0;
  }
}

// ---- Monte Carlo counting ---------------------------------------------------

// Samples uniformly in the ball of radius `radius` around `center` (length d)
// and counts samples satisfying `inside`. Sample s consumes the counters
// [s * ball_sample_draws(d), ...), so the count does not depend on threading.
template <class Pred>
std::uint64_t ball_sample_count_serial(int d, double radius,
                                       const double* center,
                                       std::uint64_t samples,
                                       std::uint64_t seed, const Pred& inside) {
  const CounterRng rng(seed);
  const int stride = ball_sample_draws(d);
  std::uint64_t count = 0;
  std::vector<double> pt(d);
  for (std::uint64_t s = 0; s < samples; ++s) {
    sample_unit_ball(rng, d, s * stride, pt.data());
    for (int k = 0; k < d; ++k) pt[k] = center[k] + radius * pt[k];
    if (inside(pt.data())) ++count;
  }
  return count;
}

template <class Pred>
std::uint64_t ball_sample_count_parallel(int d, double radius,
                                         const double* center,
                                         std::uint64_t samples,
                                         std::uint64_t seed,
                                         const Pred& inside) {
  const CounterRng rng(seed);
  const int stride = ball_sample_draws(d);
  std::uint64_t count = 0;
#pragma omp parallel
  {
    std::vector<double> pt(d);
#pragma omp for reduction(+ : count) schedule(static)
    for (long long s = 0; s < static_cast<long long>(samples); ++s) {
      sample_unit_ball(rng, d, static_cast<std::uint64_t>(s) * stride,
                       pt.data());
      for (int k = 0; k < d; ++k) pt[k] = center[k] + radius * pt[k];
      if (inside(pt.data())) ++count;
    }
  }
  return count;
}

std::uint64_t lens_inside_count_serial(int d, double r, double R,
                                       std::uint64_t samples,
                                       std::uint64_t seed);
std::uint64_t lens_inside_count_parallel(int d, double r, double R,
                                         std::uint64_t samples,
                                         std::uint64_t seed);

}  // namespace shepard::par
