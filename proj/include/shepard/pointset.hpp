#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace shepard {

// Finite set of d-dimensional points, stored row-major. Construction rejects
// dimension mismatches, non-finite coordinates, and exact duplicates (a
// duplicate would make the separation radius zero).
struct PointSet {
  int d = 0;
  std::vector<double> coords;
  std::string label;

  std::size_t size() const { return d > 0 ? coords.size() / d : 0; }
  std::span<const double> point(std::size_t i) const {
    return {coords.data() + i * d, static_cast<std::size_t>(d)};
  }
  const double* data() const { return coords.data(); }

  static PointSet from_rows(int d, std::vector<double> coords,
                            std::string label = {});
};

// Convex domain: an axis-aligned box or a ball.
struct DomainSpec {
  enum class Kind { box, ball };
  Kind kind = Kind::box;
  std::vector<double> lo, hi;  // box
  std::vector<double> center;  // ball
  double radius = 0.0;

  static DomainSpec box(std::vector<double> lo, std::vector<double> hi);
  static DomainSpec unit_box(int d);
  static DomainSpec ball(std::vector<double> center, double radius);

  int dim() const;
  bool contains(std::span<const double> x, double slack = 0.0) const;
  double diameter() const;
  // Bounding box of the domain.
  std::vector<double> bound_lo() const;
  std::vector<double> bound_hi() const;
  // Largest distance from x to a point of the domain.
  double farthest_distance(std::span<const double> x) const;
  // Length of the longest chord in direction u (u nonzero, need not be unit).
  double max_chord(std::span<const double> u) const;
};

// Lattice of per_axis^d cell midpoints in a box domain. Per-axis spacing is
// ext_k / per_axis; for a cube, q = spacing/2 and h = spacing*sqrt(d)/2.
PointSet gen_grid(int d, int per_axis, const DomainSpec& domain);

// Planar hexagonal lattice with generator columns s*(sqrt(3), -1) and
// s*(0, 2), s = 1/sqrt(n_target), clipped to a box domain. Nearest-neighbor
// distance 2s, covering radius 2s/sqrt(3).
PointSet gen_hexagonal(std::size_t n_target, const DomainSpec& domain);

// Box whose area equals the hexagonal cell area times n_target/n, so the clip
// keeps about n_target points: [0, (2 sqrt 3)^{1/2}]^2.
DomainSpec hexagonal_natural_box();

// Seeded dart throwing with pairwise distance >= min_dist, followed by a
// lattice sweep that inserts any uncovered location, which makes the sample
// maximal over a grid of spacing min_dist/2 (so the fill distance is at most
// min_dist plus the sweep resolution).
PointSet gen_poisson_disk(int d, double min_dist, const DomainSpec& domain,
                          std::uint64_t seed);

// Half the minimum pairwise distance. The default path is grid-bucketed and
// parallel; the O(n^2) reference returns the identical value.
double separation_radius(const PointSet& ps);
double separation_radius_serial(const PointSet& ps);

// Max over a probe lattice (spacing <= probe_resolution, boundary included)
// of the distance to the nearest site. Lower-bounds the true fill distance;
// the defect is at most probe_resolution * sqrt(d) / 2. margin > 0 shrinks
// the probed region away from the boundary.
double fill_distance(const PointSet& ps, const DomainSpec& domain,
                     double probe_resolution, double margin = 0.0);

struct UniformityReport {
  std::size_t n = 0;
  int d = 0;
  double q = 0.0;      // separation radius
  double h = 0.0;      // measured fill distance (lower bound of the true h)
  double rho = 0.0;    // h / q
  double c_est = 0.0;  // 2 q n^{1/d}: tightest separation constant
  double C_est = 0.0;  // h n^{1/d}: tightest fill constant for the measured h
  double probe_resolution = 0.0;
  double h_slack = 0.0;  // true h <= h + h_slack (probe lattice certificate)
};

UniformityReport uniformity_report(const PointSet& ps, const DomainSpec& domain,
                                   double probe_resolution = 0.0,
                                   double margin = 0.0);

// Occupancy of concentric rings around `center`: counts[k] is the number of
// sites with k*t <= |y - center| < (k+1)*t. Ring 0 is the central ball; the
// half-open convention puts every site in exactly one ring.
struct AnnulusCountReport {
  std::vector<double> center;
  double thickness = 0.0;
  std::vector<std::uint64_t> counts;
  // bounds[k] is the applicable occupancy bound for ring k (NaN if none);
  // filled by verify_counting_bounds.
  std::vector<double> bounds;
};

AnnulusCountReport count_annuli(const PointSet& ps,
                                std::span<const double> center,
                                double thickness);

// 2^{(3d+3)/2} (C/c)^d: the coefficient of the occupancy bound for rings of
// thickness C n^{-1/d} under separation constant c. Requires 0 < c <= 2C.
double annulus_packing_constant(int d, double c, double C);

// Occupancy bound for ring j >= 1 of thickness C n^{-1/d}:
// annulus_packing_constant * [j^d - (j-1)^d].
double annulus_count_bound(int d, double c, double C, int j);

// Occupancy bound for the shell with inner radius j*delta and thickness
// delta, where delta is the separation radius: 2d j^{d-1} e^{(5d-3)/(4j-1)}.
double separation_shell_count_bound(int d, int j);

struct CountViolation {
  std::string scale;  // "fill" or "separation"
  std::vector<double> center;
  int ring = 0;
  std::uint64_t count = 0;
  double bound = 0.0;
};

struct CountingVerification {
  UniformityReport report;
  // Rings of thickness C_est n^{-1/d}; ring k checked against
  // annulus_count_bound(d, c_est, C_est, k+1).
  std::vector<AnnulusCountReport> fill_scale;
  // Rings of thickness q. Ring k >= 1 has inner radius k*q and is checked
  // against separation_shell_count_bound(d, k); ring 0 is the ball of radius
  // q, which holds at most one site.
  std::vector<AnnulusCountReport> separation_scale;
  std::vector<CountViolation> violations;
};

CountingVerification verify_counting_bounds(
    const PointSet& ps, const DomainSpec& domain,
    const UniformityReport& report,
    const std::vector<std::vector<double>>& centers);

// Probe lattice covering the domain (boundary nodes included for boxes),
// spacing <= resolution per axis, optionally inset by margin.
std::vector<double> probe_lattice(const DomainSpec& domain, double resolution,
                                  double margin = 0.0);
// Lattice with a fixed per-axis node count.
std::vector<double> probe_lattice_count(const DomainSpec& domain,
                                        int per_axis);
// Seeded uniform points in the domain.
std::vector<std::vector<double>> random_points_in(const DomainSpec& domain,
                                                  int count,
                                                  std::uint64_t seed);

}  // namespace shepard
