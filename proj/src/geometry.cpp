#include "shepard/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "shepard/parallel.hpp"
#include "shepard/quadrature.hpp"
#include "shepard/specfun.hpp"

namespace shepard {

void LensConfig::validate() const {
  if (d < 1) throw std::invalid_argument("LensConfig: dimension must be >= 1");
  if (!(r > 0.0) || !(R > 0.0)) {
    throw std::invalid_argument("LensConfig: radii must be positive");
  }
  if (r > 2.0 * R) {
    throw std::invalid_argument("LensConfig: requires r <= 2R");
  }
}

double LensConfig::half_angle() const {
  return std::acos(std::clamp(r / (2.0 * R), -1.0, 1.0));
}

double LensConfig::sin_sq_half() const {
  // sin^2(A/2) = (1 - cos A)/2 with cos A = r / (2R).
  return 0.5 * (1.0 - std::clamp(r / (2.0 * R), 0.0, 1.0));
}

namespace {

// pi^{(d-1)/2} / Gamma((d+1)/2), the constant of V_{d-1}.
double slice_coefficient(int d) {
  return std::exp(0.5 * (d - 1) * std::log(std::numbers::pi) -
                  log_gamma(0.5 * (d + 1)));
}

}  // namespace

double small_cap_closed_form(const LensConfig& cfg) {
  cfg.validate();
  const int d = cfg.d;
  const double z = cfg.sin_sq_half();
  if (z == 0.0) return 0.0;  // r = 2R: the cap degenerates
  const double hyper = gauss_2f1_series(
      {-0.5 * (d - 1), 0.5 * (d + 1), 0.5 * (d + 3), z});
  const double log_coef = (d + 1) * std::numbers::ln2 + d * std::log(cfg.r) +
                          0.5 * (d - 1) * std::log(std::numbers::pi) -
                          log_gamma(0.5 * (d + 1));
  return std::pow(z, 0.5 * (d + 1)) * std::exp(log_coef) / (d + 1) * hyper;
}

double large_cap_upper_bound(const LensConfig& cfg) {
  cfg.validate();
  const int d = cfg.d;
  return std::exp(0.5 * (d - 1) * std::log(std::numbers::pi) +
                  (d + 1) * std::log(cfg.r) - std::log(cfg.R) -
                  log_gamma(0.5 * (d + 1))) /
         (d + 1);
}

LensSplit lens_volume_quadrature(const LensConfig& cfg) {
  cfg.validate();
  const int d = cfg.d;
  const double coef = slice_coefficient(d);
  const double ratio = std::clamp(cfg.r / (2.0 * cfg.R), 0.0, 1.0);

  // Small-ball cap: x = r sin(theta) turns the integrand into r^d cos^d.
  const double theta0 = std::asin(ratio);
  const double small = integrate_adaptive(
      [d](double t) { return std::pow(std::cos(t), d); }, theta0,
      0.5 * std::numbers::pi, 1e-13);

  // Large-ball cap: x = R (1 - cos(phi)) turns the integrand into R^d sin^d.
  const double phi1 = std::acos(std::clamp(
      1.0 - cfg.r * cfg.r / (2.0 * cfg.R * cfg.R), -1.0, 1.0));
  const double large = integrate_adaptive(
      [d](double t) { return std::pow(std::sin(t), d); }, 0.0, phi1, 1e-13);

  LensSplit out;
  out.cap_small = coef * std::pow(cfg.r, d) * small;
  out.cap_large = coef * std::pow(cfg.R, d) * large;
  return out;
}

MonteCarloEstimate lens_volume_monte_carlo(const LensConfig& cfg,
                                           std::uint64_t samples,
                                           std::uint64_t seed) {
  cfg.validate();
  if (samples == 0) {
    throw std::invalid_argument("lens_volume_monte_carlo: samples must be >= 1");
  }
  const std::uint64_t hits =
      par::lens_inside_count_parallel(cfg.d, cfg.r, cfg.R, samples, seed);
  const double vol = ball_volume(cfg.d, cfg.r);
  const double p = static_cast<double>(hits) / static_cast<double>(samples);
  MonteCarloEstimate out;
  out.hits = hits;
  out.samples = samples;
  out.estimate = p * vol;
  out.std_error =
      vol * std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
  return out;
}

double lens_volume_lower_bound(const LensConfig& cfg) {
  return small_cap_closed_form(cfg);
}

void AnnulusFamily::validate() const {
  if (d < 1) throw std::invalid_argument("AnnulusFamily: dimension must be >= 1");
  if (!(thickness > 0.0)) {
    throw std::invalid_argument("AnnulusFamily: thickness must be positive");
  }
  if (!center.empty() && static_cast<int>(center.size()) != d) {
    throw std::invalid_argument("AnnulusFamily: center dimension mismatch");
  }
}

double annulus_measure(const AnnulusFamily& fam, int j) {
  fam.validate();
  if (j < 1) throw std::invalid_argument("annulus_measure: j must be >= 1");
  return ball_volume(fam.d, j * fam.thickness) -
         ball_volume(fam.d, (j - 1) * fam.thickness);
}

double annulus_ball_overlap_lower_bound(const AnnulusFamily& fam, int j,
                                        double rho) {
  fam.validate();
  if (j < 1) throw std::invalid_argument("annulus overlap: j must be >= 1");
  if (!(rho > 0.0) || rho > 2.0 * j * fam.thickness) {
    throw std::invalid_argument(
        "annulus overlap: requires 0 < rho <= 2 j thickness");
  }
  return small_cap_closed_form({fam.d, rho, j * fam.thickness});
}

MonteCarloEstimate annulus_ball_overlap_monte_carlo(
    int d, double inner, double outer, double center_dist, double rho,
    std::uint64_t samples, std::uint64_t seed) {
  if (d < 1 || !(rho > 0.0) || !(outer > inner) || inner < 0.0) {
    throw std::invalid_argument("annulus overlap MC: invalid geometry");
  }
  std::vector<double> center(d, 0.0);
  center[0] = center_dist;
  const double in2 = inner * inner, out2 = outer * outer;
  const auto inside = [d, in2, out2](const double* x) {
    double norm_sq = 0.0;
    for (int k = 0; k < d; ++k) norm_sq += x[k] * x[k];
    return norm_sq >= in2 && norm_sq < out2;
  };
  const std::uint64_t hits = par::ball_sample_count_parallel(
      d, rho, center.data(), samples, seed, inside);
  const double vol = ball_volume(d, rho);
  const double p = static_cast<double>(hits) / static_cast<double>(samples);
  MonteCarloEstimate out;
  out.hits = hits;
  out.samples = samples;
  out.estimate = p * vol;
  out.std_error =
      vol * std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
  return out;
}

}  // namespace shepard
