#include "shepard/pointset.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

#include "shepard/parallel.hpp"
#include "shepard/rng.hpp"
#include "shepard/specfun.hpp"

namespace shepard {

namespace {

constexpr std::size_t kMaxProbes = 60'000'000;

double norm(std::span<const double> x) {
  double acc = 0.0;
  for (double v : x) acc += v * v;
  return std::sqrt(acc);
}

}  // namespace

PointSet PointSet::from_rows(int d, std::vector<double> coords,
                             std::string label) {
  if (d < 1) throw std::invalid_argument("PointSet: dimension must be >= 1");
  if (coords.empty() || coords.size() % d != 0) {
    throw std::invalid_argument("PointSet: coordinate count not a multiple of d");
  }
  for (double v : coords) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("PointSet: non-finite coordinate");
    }
  }
  PointSet ps;
  ps.d = d;
  ps.coords = std::move(coords);
  ps.label = std::move(label);

  // Reject exact duplicates via a lexicographic sort of row indices.
  const std::size_t n = ps.size();
  std::vector<std::uint32_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  const double* p = ps.coords.data();
  std::sort(idx.begin(), idx.end(), [&](std::uint32_t a, std::uint32_t b) {
    return std::lexicographical_compare(p + a * d, p + (a + 1) * d, p + b * d,
                                        p + (b + 1) * d);
  });
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (std::equal(p + idx[i] * d, p + (idx[i] + 1) * d, p + idx[i + 1] * d)) {
      throw std::invalid_argument("PointSet: duplicate point");
    }
  }
  return ps;
}

DomainSpec DomainSpec::box(std::vector<double> lo, std::vector<double> hi) {
  if (lo.empty() || lo.size() != hi.size()) {
    throw std::invalid_argument("DomainSpec: box bounds dimension mismatch");
  }
  for (std::size_t k = 0; k < lo.size(); ++k) {
    if (!(lo[k] < hi[k])) {
      throw std::invalid_argument("DomainSpec: box needs lo < hi per axis");
    }
  }
  DomainSpec dom;
  dom.kind = Kind::box;
  dom.lo = std::move(lo);
  dom.hi = std::move(hi);
  return dom;
}

DomainSpec DomainSpec::unit_box(int d) {
  return box(std::vector<double>(d, 0.0), std::vector<double>(d, 1.0));
}

DomainSpec DomainSpec::ball(std::vector<double> center, double radius) {
  if (center.empty()) throw std::invalid_argument("DomainSpec: empty center");
  if (!(radius > 0.0)) {
    throw std::invalid_argument("DomainSpec: ball radius must be positive");
  }
  DomainSpec dom;
  dom.kind = Kind::ball;
  dom.center = std::move(center);
  dom.radius = radius;
  return dom;
}

int DomainSpec::dim() const {
  return kind == Kind::box ? static_cast<int>(lo.size())
                           : static_cast<int>(center.size());
}

bool DomainSpec::contains(std::span<const double> x, double slack) const {
  if (static_cast<int>(x.size()) != dim()) return false;
  if (kind == Kind::box) {
    for (std::size_t k = 0; k < x.size(); ++k) {
      if (x[k] < lo[k] - slack || x[k] > hi[k] + slack) return false;
    }
    return true;
  }
  double acc = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    const double diff = x[k] - center[k];
    acc += diff * diff;
  }
  return acc <= (radius + slack) * (radius + slack);
}

double DomainSpec::diameter() const {
  if (kind == Kind::ball) return 2.0 * radius;
  double acc = 0.0;
  for (std::size_t k = 0; k < lo.size(); ++k) {
    const double ext = hi[k] - lo[k];
    acc += ext * ext;
  }
  return std::sqrt(acc);
}

std::vector<double> DomainSpec::bound_lo() const {
  if (kind == Kind::box) return lo;
  std::vector<double> out(center);
  for (double& v : out) v -= radius;
  return out;
}

std::vector<double> DomainSpec::bound_hi() const {
  if (kind == Kind::box) return hi;
  std::vector<double> out(center);
  for (double& v : out) v += radius;
  return out;
}

double DomainSpec::farthest_distance(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != dim()) {
    throw std::invalid_argument("farthest_distance: dimension mismatch");
  }
  if (kind == Kind::ball) {
    double acc = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
      const double diff = x[k] - center[k];
      acc += diff * diff;
    }
    return std::sqrt(acc) + radius;
  }
  double acc = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    const double far = std::max(std::abs(x[k] - lo[k]), std::abs(hi[k] - x[k]));
    acc += far * far;
  }
  return std::sqrt(acc);
}

double DomainSpec::max_chord(std::span<const double> u) const {
  const double len = norm(u);
  if (!(len > 0.0)) throw std::invalid_argument("max_chord: zero direction");
  if (kind == Kind::ball) return 2.0 * radius;
  // Longest segment t * u/|u| that fits in the box.
  double t = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < u.size(); ++k) {
    const double dir = std::abs(u[k]) / len;
    if (dir > 0.0) t = std::min(t, (hi[k] - lo[k]) / dir);
  }
  return t;
}

PointSet gen_grid(int d, int per_axis, const DomainSpec& domain) {
  if (domain.kind != DomainSpec::Kind::box) {
    throw std::invalid_argument("gen_grid: requires a box domain");
  }
  if (d != domain.dim()) throw std::invalid_argument("gen_grid: dimension mismatch");
  if (per_axis < 1) throw std::invalid_argument("gen_grid: per_axis must be >= 1");
  std::size_t n = 1;
  for (int k = 0; k < d; ++k) n *= static_cast<std::size_t>(per_axis);
  if (n > kMaxProbes) throw std::invalid_argument("gen_grid: too many points");

  std::vector<double> coords;
  coords.reserve(n * d);
  std::vector<int> odo(d, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (int k = 0; k < d; ++k) {
      const double spacing = (domain.hi[k] - domain.lo[k]) / per_axis;
      coords.push_back(domain.lo[k] + (odo[k] + 0.5) * spacing);
    }
    for (int k = d - 1; k >= 0; --k) {
      if (++odo[k] < per_axis) break;
      odo[k] = 0;
    }
  }
  return PointSet::from_rows(d, std::move(coords), "grid");
}

DomainSpec hexagonal_natural_box() {
  const double side = std::sqrt(2.0 * std::sqrt(3.0));
  return DomainSpec::box({0.0, 0.0}, {side, side});
}

PointSet gen_hexagonal(std::size_t n_target, const DomainSpec& domain) {
  if (domain.kind != DomainSpec::Kind::box || domain.dim() != 2) {
    throw std::invalid_argument("gen_hexagonal: requires a planar box domain");
  }
  if (n_target == 0) throw std::invalid_argument("gen_hexagonal: empty target");
  const double s = 1.0 / std::sqrt(static_cast<double>(n_target));
  // Lattice points i * s*(sqrt3, -1) + j * s*(0, 2).
  const double ux = s * std::sqrt(3.0), uy = -s;
  const double vy = 2.0 * s;
  const int i_lo = static_cast<int>(std::floor(domain.lo[0] / ux));
  const int i_hi = static_cast<int>(std::ceil(domain.hi[0] / ux));
  std::vector<double> coords;
  for (int i = i_lo; i <= i_hi; ++i) {
    const double x = i * ux;
    if (x < domain.lo[0] || x > domain.hi[0]) continue;
    const double y_base = i * uy;
    const int j_lo = static_cast<int>(std::floor((domain.lo[1] - y_base) / vy));
    const int j_hi = static_cast<int>(std::ceil((domain.hi[1] - y_base) / vy));
    for (int j = j_lo; j <= j_hi; ++j) {
      const double y = y_base + j * vy;
      if (y < domain.lo[1] || y > domain.hi[1]) continue;
      coords.push_back(x);
      coords.push_back(y);
    }
  }
  if (coords.empty()) {
    throw std::invalid_argument("gen_hexagonal: no lattice point in domain");
  }
  return PointSet::from_rows(2, std::move(coords), "hexagonal");
}

namespace {

// Dynamic bucket grid with cell size = min_dist for insertion-time
// conflict checks (3^d neighborhood suffices).
class InsertGrid {
 public:
  InsertGrid(int d, double min_dist, const std::vector<double>& lo)
      : d_(d), cell_(min_dist), lo_(lo) {}

  bool too_close(const double* p, const std::vector<double>& coords) const {
    std::vector<int> base(d_);
    for (int k = 0; k < d_; ++k) {
      base[k] = static_cast<int>(std::floor((p[k] - lo_[k]) / cell_));
    }
    std::vector<int> off(d_, -1);
    for (;;) {
      std::int64_t key = 0;
      for (int k = 0; k < d_; ++k) key = key * 73856093 + (base[k] + off[k]);
      const auto it = cells_.find(key);
      if (it != cells_.end()) {
        for (std::uint32_t i : it->second) {
          if (par::dist_sq(p, coords.data() + i * d_, d_) < cell_ * cell_) {
            return true;
          }
        }
      }
      int k = 0;
      for (; k < d_; ++k) {
        if (++off[k] <= 1) break;
        off[k] = -1;
      }
      if (k == d_) break;
    }
    return false;
  }

  void insert(const double* p, std::uint32_t index) {
    std::int64_t key = 0;
    for (int k = 0; k < d_; ++k) {
      key = key * 73856093 +
            static_cast<int>(std::floor((p[k] - lo_[k]) / cell_));
    }
    cells_[key].push_back(index);
  }

 private:
  int d_;
  double cell_;
  std::vector<double> lo_;
  std::map<std::int64_t, std::vector<std::uint32_t>> cells_;
};

}  // namespace

PointSet gen_poisson_disk(int d, double min_dist, const DomainSpec& domain,
                          std::uint64_t seed) {
  if (!(min_dist > 0.0)) {
    throw std::invalid_argument("gen_poisson_disk: min_dist must be positive");
  }
  if (d != domain.dim()) {
    throw std::invalid_argument("gen_poisson_disk: dimension mismatch");
  }
  const auto lo = domain.bound_lo();
  const auto hi = domain.bound_hi();
  double bbox_vol = 1.0;
  for (int k = 0; k < d; ++k) bbox_vol *= hi[k] - lo[k];
  const double capacity =
      std::max(1.0, bbox_vol / ball_volume(d, 0.5 * min_dist));
  const std::uint64_t darts =
      static_cast<std::uint64_t>(std::min(5e7, 40.0 * capacity + 1000.0));

  std::vector<double> coords;
  InsertGrid grid(d, min_dist, lo);
  SequentialRng rng(seed);
  std::vector<double> p(d);
  std::uint32_t count = 0;
  for (std::uint64_t t = 0; t < darts; ++t) {
    for (int k = 0; k < d; ++k) p[k] = rng.uniform(lo[k], hi[k]);
    if (!domain.contains(p)) continue;
    if (grid.too_close(p.data(), coords)) continue;
    coords.insert(coords.end(), p.begin(), p.end());
    grid.insert(p.data(), count++);
  }
  // Maximality sweep: walk a lattice of spacing min_dist/2 in scan order and
  // plug any hole, so no probed location is farther than min_dist from a site.
  const auto lattice = probe_lattice(domain, 0.5 * min_dist);
  for (std::size_t i = 0; i * d < lattice.size(); ++i) {
    const double* x = lattice.data() + i * d;
    if (grid.too_close(x, coords)) continue;
    coords.insert(coords.end(), x, x + d);
    grid.insert(x, count++);
  }
  return PointSet::from_rows(d, std::move(coords), "poisson_disk");
}

double separation_radius_serial(const PointSet& ps) {
  if (ps.size() < 2) {
    throw std::invalid_argument("separation_radius: needs at least 2 points");
  }
  return 0.5 * std::sqrt(par::min_pairwise_sq_serial(ps.data(), ps.size(), ps.d));
}

double separation_radius(const PointSet& ps) {
  if (ps.size() < 2) {
    throw std::invalid_argument("separation_radius: needs at least 2 points");
  }
  return 0.5 *
         std::sqrt(par::min_pairwise_sq_bucketed(ps.data(), ps.size(), ps.d));
}

std::vector<double> probe_lattice(const DomainSpec& domain, double resolution,
                                  double margin) {
  if (!(resolution > 0.0)) {
    throw std::invalid_argument("probe_lattice: resolution must be positive");
  }
  const int d = domain.dim();
  auto lo = domain.bound_lo();
  auto hi = domain.bound_hi();
  for (int k = 0; k < d; ++k) {
    lo[k] += margin;
    hi[k] -= margin;
    if (!(lo[k] <= hi[k])) {
      throw std::invalid_argument("probe_lattice: margin exceeds the domain");
    }
  }
  std::vector<int> counts(d);
  double total = 1.0;
  for (int k = 0; k < d; ++k) {
    const double ext = hi[k] - lo[k];
    counts[k] = ext > 0.0 ? static_cast<int>(std::ceil(ext / resolution)) + 1 : 1;
    total *= counts[k];
  }
  if (total > static_cast<double>(kMaxProbes)) {
    throw std::invalid_argument("probe_lattice: too many probe points");
  }
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(total) * d);
  std::vector<int> odo(d, 0);
  std::vector<double> x(d);
  const bool filter = domain.kind == DomainSpec::Kind::ball;
  for (;;) {
    for (int k = 0; k < d; ++k) {
      x[k] = counts[k] == 1 ? 0.5 * (lo[k] + hi[k])
                            : lo[k] + (hi[k] - lo[k]) * odo[k] / (counts[k] - 1);
    }
    if (!filter || domain.contains(x, margin > 0.0 ? -margin : 0.0)) {
      out.insert(out.end(), x.begin(), x.end());
    }
    int k = d - 1;
    for (; k >= 0; --k) {
      if (++odo[k] < counts[k]) break;
      odo[k] = 0;
    }
    if (k < 0) break;
  }
  return out;
}

std::vector<double> probe_lattice_count(const DomainSpec& domain,
                                        int per_axis) {
  if (per_axis < 2) throw std::invalid_argument("probe_lattice_count: per_axis >= 2");
  const int d = domain.dim();
  const auto lo = domain.bound_lo();
  const auto hi = domain.bound_hi();
  double ext = 0.0;
  for (int k = 0; k < d; ++k) ext = std::max(ext, hi[k] - lo[k]);
  return probe_lattice(domain, ext / (per_axis - 1) * (1.0 + 1e-12));
}

std::vector<std::vector<double>> random_points_in(const DomainSpec& domain,
                                                  int count,
                                                  std::uint64_t seed) {
  const int d = domain.dim();
  const auto lo = domain.bound_lo();
  const auto hi = domain.bound_hi();
  SequentialRng rng(seed);
  std::vector<std::vector<double>> out;
  out.reserve(count);
  std::vector<double> x(d);
  while (static_cast<int>(out.size()) < count) {
    for (int k = 0; k < d; ++k) x[k] = rng.uniform(lo[k], hi[k]);
    if (domain.contains(x)) out.push_back(x);
  }
  return out;
}

double fill_distance(const PointSet& ps, const DomainSpec& domain,
                     double probe_resolution, double margin) {
  if (ps.size() == 0) throw std::invalid_argument("fill_distance: empty set");
  if (ps.d != domain.dim()) {
    throw std::invalid_argument("fill_distance: dimension mismatch");
  }
  const auto probes = probe_lattice(domain, probe_resolution, margin);
  const std::size_t m = probes.size() / ps.d;
  std::vector<double> nearest(m);
  const par::NeighborGrid grid(ps.data(), ps.size(), ps.d);
  par::nearest_site_sq_parallel(grid, ps.d, probes.data(), m, nearest.data());
  return std::sqrt(par::max_of(nearest.data(), m));
}

UniformityReport uniformity_report(const PointSet& ps, const DomainSpec& domain,
                                   double probe_resolution, double margin) {
  UniformityReport rep;
  rep.n = ps.size();
  rep.d = ps.d;
  rep.q = separation_radius(ps);
  if (probe_resolution <= 0.0) probe_resolution = 0.25 * rep.q;
  rep.probe_resolution = probe_resolution;
  rep.h = fill_distance(ps, domain, probe_resolution, margin);
  rep.h_slack = 0.5 * probe_resolution * std::sqrt(static_cast<double>(ps.d));
  rep.rho = rep.h / rep.q;
  const double root = std::pow(static_cast<double>(rep.n),
                               1.0 / static_cast<double>(ps.d));
  rep.c_est = 2.0 * rep.q * root;
  rep.C_est = rep.h * root;
  if (rep.h + rep.h_slack < rep.q) {
    // The true fill distance always dominates the separation radius.
    throw std::logic_error("uniformity_report: certified h upper bound below q");
  }
  return rep;
}

AnnulusCountReport count_annuli(const PointSet& ps,
                                std::span<const double> center,
                                double thickness) {
  if (!(thickness > 0.0)) {
    throw std::invalid_argument("count_annuli: thickness must be positive");
  }
  if (static_cast<int>(center.size()) != ps.d) {
    throw std::invalid_argument("count_annuli: center dimension mismatch");
  }
  AnnulusCountReport rep;
  rep.center.assign(center.begin(), center.end());
  rep.thickness = thickness;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const double dist =
        std::sqrt(par::dist_sq(center.data(), ps.data() + i * ps.d, ps.d));
    const auto ring = static_cast<std::size_t>(std::floor(dist / thickness));
    if (rep.counts.size() <= ring) rep.counts.resize(ring + 1, 0);
    ++rep.counts[ring];
  }
  return rep;
}

double annulus_packing_constant(int d, double c, double C) {
  if (d < 1) throw std::invalid_argument("packing constant: d must be >= 1");
  if (!(c > 0.0) || !(C > 0.0) || c > 2.0 * C) {
    throw std::invalid_argument("packing constant: requires 0 < c <= 2C");
  }
  return std::exp2(0.5 * (3.0 * d + 3.0)) * std::pow(C / c, d);
}

double annulus_count_bound(int d, double c, double C, int j) {
  if (j < 1) throw std::invalid_argument("annulus_count_bound: j must be >= 1");
  return annulus_packing_constant(d, c, C) *
         (std::pow(static_cast<double>(j), d) -
          std::pow(static_cast<double>(j - 1), d));
}

double separation_shell_count_bound(int d, int j) {
  if (d < 1 || j < 1) {
    throw std::invalid_argument("shell count bound: requires d >= 1, j >= 1");
  }
  return 2.0 * d * std::pow(static_cast<double>(j), d - 1) *
         std::exp((5.0 * d - 3.0) / (4.0 * j - 1.0));
}

CountingVerification verify_counting_bounds(
    const PointSet& ps, const DomainSpec& domain,
    const UniformityReport& report,
    const std::vector<std::vector<double>>& centers) {
  (void)domain;
  CountingVerification out;
  out.report = report;
  const int d = ps.d;
  const double fill_thickness =
      report.C_est * std::pow(static_cast<double>(report.n), -1.0 / d);
  constexpr double kSlack = 1.0 + 1e-12;

  for (const auto& center : centers) {
    AnnulusCountReport fill = count_annuli(ps, center, fill_thickness);
    fill.bounds.resize(fill.counts.size());
    for (std::size_t k = 0; k < fill.counts.size(); ++k) {
      fill.bounds[k] =
          annulus_count_bound(d, report.c_est, report.C_est, static_cast<int>(k) + 1);
      if (static_cast<double>(fill.counts[k]) > fill.bounds[k] * kSlack) {
        out.violations.push_back({"fill", center, static_cast<int>(k),
                                  fill.counts[k], fill.bounds[k]});
      }
    }
    out.fill_scale.push_back(std::move(fill));

    AnnulusCountReport sep = count_annuli(ps, center, report.q);
    sep.bounds.resize(sep.counts.size());
    for (std::size_t k = 0; k < sep.counts.size(); ++k) {
      // Ring k has inner radius k*q; the shell bound applies for k >= 1. The
      // central ball of radius q holds at most one site of a 2q-separated set.
      sep.bounds[k] = k == 0 ? 1.0
                             : separation_shell_count_bound(d, static_cast<int>(k));
      if (static_cast<double>(sep.counts[k]) > sep.bounds[k] * kSlack) {
        out.violations.push_back({"separation", center, static_cast<int>(k),
                                  sep.counts[k], sep.bounds[k]});
      }
    }
    out.separation_scale.push_back(std::move(sep));
  }
  return out;
}

}  // namespace shepard
