#include "shepard/quadrature.hpp"

#include <numbers>
#include <stdexcept>

namespace shepard {

namespace {

GaussLegendreRule make_rule(int n) {
  if (n < 2) throw std::invalid_argument("gauss_legendre: order must be >= 2");
  GaussLegendreRule rule;
  rule.x.assign(n, 0.0);
  rule.w.assign(n, 0.0);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Newton iteration from the Chebyshev-based initial guess.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    rule.x[i] = -x;
    rule.x[n - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.w[i] = w;
    rule.w[n - 1 - i] = w;
  }
  return rule;
}

}  // namespace

const GaussLegendreRule& gauss_legendre(int n) {
  static const GaussLegendreRule rule64 = make_rule(64);
  if (n == 64) return rule64;
  thread_local GaussLegendreRule custom;
  thread_local int custom_n = -1;
  if (custom_n != n) {
    custom = make_rule(n);
    custom_n = n;
  }
  return custom;
}

}  // namespace shepard
