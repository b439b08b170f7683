#pragma once

#include <cstdint>
#include <vector>

namespace shepard {

// Intersection of two balls in R^d: a small ball of radius r centered at the
// origin and a large ball of radius R centered at (R, 0, ..., 0), i.e. the
// small ball sits on the large ball's boundary. This canonical placement is
// the minimal-overlap configuration; translation/rotation invariance makes it
// the only one needed. Requires 0 < r <= 2R so the chord plane
// x = r^2 / (2R) cuts the small ball.
struct LensConfig {
  int d;
  double r;
  double R;

  void validate() const;
  // Half-angle parameters: A = arccos(r / 2R), z = sin^2(A/2) = (1 - r/2R)/2.
  double half_angle() const;
  double sin_sq_half() const;
};

// The lens splits at the chord plane into a cap of the large ball (the sliver
// between the boundary and the plane) and a cap of the small ball.
struct LensSplit {
  double cap_large = 0.0;  // I:  int_0^{x~} V_{d-1}(sqrt(2Rx - x^2)) dx
  double cap_small = 0.0;  // II: int_{x~}^r V_{d-1}(sqrt(r^2 - x^2)) dx
  double total() const { return cap_large + cap_small; }
};

// Closed form of the small-ball cap:
//   sin^{d+1}(A/2) 2^{d+1} r^d pi^{(d-1)/2} / ((d+1) Gamma((d+1)/2))
//     * 2F1(-(d-1)/2, (d+1)/2; (d+3)/2; sin^2(A/2)).
double small_cap_closed_form(const LensConfig& cfg);

// Elementary upper bound for the large-ball cap:
//   pi^{(d-1)/2} r^{d+1} / ((d+1) R Gamma((d+1)/2)).
double large_cap_upper_bound(const LensConfig& cfg);

// Both one-dimensional volume integrals evaluated by adaptive quadrature
// (after trig substitutions that keep the integrand smooth). cap_large +
// cap_small is the exact lens volume; this is the closed form's oracle.
LensSplit lens_volume_quadrature(const LensConfig& cfg);

struct MonteCarloEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
  std::uint64_t hits = 0;
  std::uint64_t samples = 0;
};

// Uniform sampling in the small ball, counting points that also fall in the
// large ball. Deterministic for a fixed seed regardless of threading.
MonteCarloEstimate lens_volume_monte_carlo(const LensConfig& cfg,
                                           std::uint64_t samples,
                                           std::uint64_t seed);

// Lower bound for the full lens volume: the small-ball cap alone (the
// large-ball cap is dropped). Strictly below the exact volume for r < 2R.
double lens_volume_lower_bound(const LensConfig& cfg);

// Concentric annuli of equal thickness around `center`; ring j >= 1 is
// {x : (j-1) t <= |x - center| < j t}, so ring 1 is a ball.
struct AnnulusFamily {
  int d;
  double thickness;
  std::vector<double> center;

  void validate() const;
};

// Volume of ring j: V_d(j t) - V_d((j-1) t).
double annulus_measure(const AnnulusFamily& fam, int j);

// Lower bound on |ring_j ∩ B(q, rho)| over centers q in the ring, realized by
// a ball of radius rho on the outer boundary (radius j t): the small-cap
// closed form with r = rho, R = j t. Requires rho <= 2 j t.
double annulus_ball_overlap_lower_bound(const AnnulusFamily& fam, int j,
                                        double rho);

// Monte Carlo volume of {inner <= |x| < outer} ∩ B(center_dist * e1, rho),
// used to check the outer-boundary reduction empirically.
MonteCarloEstimate annulus_ball_overlap_monte_carlo(int d, double inner,
                                                    double outer,
                                                    double center_dist,
                                                    double rho,
                                                    std::uint64_t samples,
                                                    std::uint64_t seed);

}  // namespace shepard
