#include "shepard/kernels.hpp"

#include <cmath>
#include <stdexcept>

namespace shepard {

void certify_kernel(const KernelSpec& kernel) {
  if (!(kernel.alpha > 0.0) || !(kernel.kappa > 0.0) || !(kernel.m1 > 0.0)) {
    throw std::invalid_argument("kernel certification: constants must be positive");
  }
  constexpr int kSamples = 10000;
  constexpr double kMaxRadius = 100.0;
  for (int i = 0; i <= kSamples; ++i) {
    const double r = kMaxRadius * i / kSamples;
    const double value = kernel(r * r);
    if (!(value > 0.0) || !std::isfinite(value)) {
      throw std::invalid_argument("kernel certification: not strictly positive");
    }
    const double decay_cap =
        kernel.kappa * std::pow(1.0 + r * r, -kernel.alpha);
    if (value > decay_cap * (1.0 + 1e-12)) {
      throw std::invalid_argument("kernel certification: decay bound violated");
    }
  }
  for (int i = 0; i <= kSamples; ++i) {
    const double r = static_cast<double>(i) / kSamples;
    if (kernel(r * r) < kernel.m1 * (1.0 - 1e-12)) {
      throw std::invalid_argument("kernel certification: unit-ball floor violated");
    }
  }
}

KernelSpec inverse_multiquadric_kernel(double alpha) {
  if (!(alpha > 0.0)) {
    throw std::invalid_argument("inverse_multiquadric_kernel: alpha must be > 0");
  }
  KernelSpec k;
  k.name = "imq";
  k.kind = KernelKind::inverse_multiquadric;
  k.alpha = alpha;
  k.kappa = 1.0;
  k.m1 = std::pow(2.0, -alpha);
  k.profile_r2 = [alpha](double r2) { return std::pow(1.0 + r2, -alpha); };
  certify_kernel(k);
  return k;
}

KernelSpec gaussian_kernel(double alpha) {
  if (!(alpha > 0.0)) {
    throw std::invalid_argument("gaussian_kernel: alpha must be > 0");
  }
  KernelSpec k;
  k.name = "gaussian";
  k.kind = KernelKind::gaussian;
  k.alpha = alpha;
  k.m1 = std::exp(-1.0);
  k.profile_r2 = [](double r2) { return std::exp(-r2); };
  // sup_t (1+t)^alpha e^{-t}: scan a grid and polish around the calculus
  // stationary point t = alpha - 1.
  double sup = 1.0;
  const auto objective = [alpha](double t) {
    return std::pow(1.0 + t, alpha) * std::exp(-t);
  };
  for (int i = 0; i <= 20000; ++i) {
    sup = std::max(sup, objective(200.0 * i / 20000));
  }
  if (alpha > 1.0) sup = std::max(sup, objective(alpha - 1.0));
  k.kappa = sup;
  certify_kernel(k);
  return k;
}

}  // namespace shepard
