#include "shepard/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace shepard::par {

double min_pairwise_sq_serial(const double* pts, std::size_t n, int d) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      best = std::min(best, dist_sq(pts + i * d, pts + j * d, d));
    }
  }
  return best;
}

double min_pairwise_sq_parallel(const double* pts, std::size_t n, int d) {
  double best = std::numeric_limits<double>::infinity();
#pragma omp parallel for reduction(min : best) schedule(dynamic, 64)
  for (long long i = 0; i + 1 < static_cast<long long>(n); ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      best = std::min(best, dist_sq(pts + i * d, pts + j * d, d));
    }
  }
  return best;
}

NeighborGrid::NeighborGrid(const double* pts, std::size_t n, int d,
                           double cell_hint)
    : pts_(pts), n_(n), d_(d) {
  if (n == 0) throw std::invalid_argument("NeighborGrid: empty point set");
  lo_.assign(d, 0.0);
  std::vector<double> hi(d, 0.0);
  for (int k = 0; k < d; ++k) {
    lo_[k] = hi[k] = pts[k];
  }
  for (std::size_t i = 1; i < n; ++i) {
    for (int k = 0; k < d; ++k) {
      lo_[k] = std::min(lo_[k], pts[i * d + k]);
      hi[k] = std::max(hi[k], pts[i * d + k]);
    }
  }
  double vol = 1.0, max_ext = 0.0;
  for (int k = 0; k < d; ++k) {
    const double ext = hi[k] - lo_[k];
    max_ext = std::max(max_ext, ext);
    vol *= std::max(ext, 1e-300);
  }
  if (max_ext == 0.0) max_ext = 1.0;
  double cell = cell_hint > 0.0
                    ? cell_hint
                    : std::pow(vol / static_cast<double>(n), 1.0 / d);
  if (!(cell > 0.0) || !std::isfinite(cell)) cell = max_ext;
  // Keep the total cell count bounded.
  constexpr double kMaxCells = 1 << 22;
  for (;;) {
    double cells = 1.0;
    for (int k = 0; k < d; ++k) {
      cells *= std::floor((hi[k] - lo_[k]) / cell) + 1.0;
    }
    if (cells <= kMaxCells) break;
    cell *= 2.0;
  }
  cell_ = cell;
  dims_.assign(d, 1);
  for (int k = 0; k < d; ++k) {
    dims_[k] = static_cast<int>(std::floor((hi[k] - lo_[k]) / cell_)) + 1;
  }
  std::size_t total = 1;
  for (int k = 0; k < d; ++k) total *= static_cast<std::size_t>(dims_[k]);

  std::vector<std::uint32_t> cell_of(n);
  std::vector<int> coord(d);
  for (std::size_t i = 0; i < n; ++i) {
    for (int k = 0; k < d; ++k) {
      int c = static_cast<int>(std::floor((pts[i * d + k] - lo_[k]) / cell_));
      coord[k] = std::clamp(c, 0, dims_[k] - 1);
    }
    cell_of[i] = static_cast<std::uint32_t>(cell_index(coord.data()));
  }
  start_.assign(total + 1, 0);
  for (std::size_t i = 0; i < n; ++i) ++start_[cell_of[i] + 1];
  for (std::size_t c = 0; c < total; ++c) start_[c + 1] += start_[c];
  order_.assign(n, 0);
  std::vector<std::uint32_t> cursor(start_.begin(), start_.end() - 1);
  for (std::size_t i = 0; i < n; ++i) {
    order_[cursor[cell_of[i]]++] = static_cast<std::uint32_t>(i);
  }
}

std::size_t NeighborGrid::cell_index(const int* coord) const {
  std::size_t idx = 0;
  for (int k = 0; k < d_; ++k) {
    idx = idx * static_cast<std::size_t>(dims_[k]) +
          static_cast<std::size_t>(coord[k]);
  }
  return idx;
}

double NeighborGrid::nearest_sq(const double* q, std::ptrdiff_t exclude) const {
  // Virtual (unclamped) cell coordinates of the query; ring r visits cells at
  // Chebyshev distance exactly r. Any point in an unvisited ring r' > r lies
  // at Euclidean distance >= (r' - 1) * cell from q.
  std::vector<int> qc(d_);
  int max_ring = 0;
  for (int k = 0; k < d_; ++k) {
    qc[k] = static_cast<int>(std::floor((q[k] - lo_[k]) / cell_));
    max_ring = std::max(max_ring,
                        std::max(qc[k], dims_[k] - 1 - qc[k]) + 1);
  }
  double best = std::numeric_limits<double>::infinity();
  std::vector<int> coord(d_);

  const auto scan_cell = [&]() {
    const std::size_t c = cell_index(coord.data());
    for (std::uint32_t s = start_[c]; s < start_[c + 1]; ++s) {
      const std::uint32_t i = order_[s];
      if (static_cast<std::ptrdiff_t>(i) == exclude) continue;
      best = std::min(best, dist_sq(q, pts_ + i * d_, d_));
    }
  };

  for (int ring = 0; ring <= max_ring; ++ring) {
    if (ring >= 2) {
      const double reach = (ring - 1) * cell_;
      if (reach * reach >= best) break;
    }
    // Enumerate grid cells with max |offset from qc| == ring.
    auto rec = [&](auto&& self, int axis, bool boundary_seen) -> void {
      if (axis == d_) {
        if (boundary_seen) scan_cell();
        return;
      }
      for (int off = -ring; off <= ring; ++off) {
        const int c = qc[axis] + off;
        if (c < 0 || c >= dims_[axis]) continue;
        const bool at_boundary = (off == -ring || off == ring);
        if (!boundary_seen && axis == d_ - 1 && !at_boundary) continue;
        coord[axis] = c;
        self(self, axis + 1, boundary_seen || at_boundary);
      }
    };
    rec(rec, 0, false);
  }
  return best;
}

double min_pairwise_sq_bucketed(const double* pts, std::size_t n, int d) {
  if (n < 2) return std::numeric_limits<double>::infinity();
  const NeighborGrid grid(pts, n, d);
  double best = std::numeric_limits<double>::infinity();
#pragma omp parallel for reduction(min : best) schedule(dynamic, 256)
  for (long long i = 0; i < static_cast<long long>(n); ++i) {
    best = std::min(best, grid.nearest_sq(pts + i * d, i));
  }
  return best;
}

void nearest_site_sq_serial(const double* sites, std::size_t n, int d,
                            const double* probes, std::size_t m, double* out) {
  for (std::size_t p = 0; p < m; ++p) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
      best = std::min(best, dist_sq(probes + p * d, sites + i * d, d));
    }
    out[p] = best;
  }
}

void nearest_site_sq_parallel(const NeighborGrid& grid, int d,
                              const double* probes, std::size_t m,
                              double* out) {
#pragma omp parallel for schedule(static)
  for (long long p = 0; p < static_cast<long long>(m); ++p) {
    out[p] = grid.nearest_sq(probes + p * d);
  }
}

double max_of(const double* values, std::size_t m) {
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < m; ++i) best = std::max(best, values[i]);
  return best;
}

namespace {

// Membership in the large ball centered at (R, 0, ..., 0): x0 >= |x|^2 / (2R).
struct LensPredicate {
  double R;
  int d;
  bool operator()(const double* x) const {
    double norm_sq = 0.0;
    for (int k = 0; k < d; ++k) norm_sq += x[k] * x[k];
    return x[0] >= norm_sq / (2.0 * R);
  }
};

}  // namespace

std::uint64_t lens_inside_count_serial(int d, double r, double R,
                                       std::uint64_t samples,
                                       std::uint64_t seed) {
  std::vector<double> origin(d, 0.0);
  return ball_sample_count_serial(d, r, origin.data(), samples, seed,
                                  LensPredicate{R, d});
}

std::uint64_t lens_inside_count_parallel(int d, double r, double R,
                                         std::uint64_t samples,
                                         std::uint64_t seed) {
  std::vector<double> origin(d, 0.0);
  return ball_sample_count_parallel(d, r, origin.data(), samples, seed,
                                    LensPredicate{R, d});
}

}  // namespace shepard::par
