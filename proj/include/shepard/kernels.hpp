#pragma once

#include <functional>
#include <string>

namespace shepard {

enum class KernelKind { inverse_multiquadric, gaussian, custom };

// Radial base function K(x) = profile(|x|^2) together with the certified
// constants witnessing the admissibility conditions:
//   (positivity/continuity)  K > 0 and continuous,
//   (floor)                  K(x) >= m1 > 0 for |x| <= 1,
//   (decay)                  K(x) <= kappa (1 + |x|^2)^{-alpha}.
// certify_kernel checks the floor and decay numerically on a dense radial
// grid; construction of the catalog kernels runs it.
struct KernelSpec {
  std::string name;
  KernelKind kind = KernelKind::custom;
  std::function<double(double)> profile_r2;
  double kappa = 0.0;
  double alpha = 0.0;
  double m1 = 0.0;

  double operator()(double r2) const { return profile_r2(r2); }
};

// K(x) = (1 + |x|^2)^{-alpha}: kappa = 1 with equality in the decay
// condition, m1 = 2^{-alpha}.
KernelSpec inverse_multiquadric_kernel(double alpha);

// K(x) = exp(-|x|^2) certified against the decay target alpha:
// m1 = 1/e, kappa = sup_t (1+t)^alpha e^{-t}.
KernelSpec gaussian_kernel(double alpha);

// Verifies the floor and decay conditions on a radial grid of 10^4 points out
// to |x| = 100; throws std::invalid_argument on the first failure.
void certify_kernel(const KernelSpec& kernel);

}  // namespace shepard
