#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace shepard {

// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> x;
  std::vector<double> w;
};

// Rule of the given order; the 64-point rule is cached.
const GaussLegendreRule& gauss_legendre(int n);

template <class F>
double gl_panel(const F& f, double a, double b, const GaussLegendreRule& rule) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double acc = 0.0;
  for (std::size_t i = 0; i < rule.x.size(); ++i) {
    acc += rule.w[i] * f(mid + half * rule.x[i]);
  }
  return acc * half;
}

// Adaptive bisection on top of fixed-order panels. A panel is accepted when
// the whole-vs-halves discrepancy drops below its tolerance share.
template <class F>
double integrate_adaptive(const F& f, double a, double b, double abs_tol,
                          const GaussLegendreRule& rule, int max_depth = 30) {
  struct Frame {
    double a, b, whole, tol;
    int depth;
  };
  std::vector<Frame> stack;
  stack.push_back({a, b, gl_panel(f, a, b, rule), abs_tol, 0});
  double total = 0.0;
  while (!stack.empty()) {
    const Frame fr = stack.back();
    stack.pop_back();
    const double m = 0.5 * (fr.a + fr.b);
    const double left = gl_panel(f, fr.a, m, rule);
    const double right = gl_panel(f, m, fr.b, rule);
    if (std::abs(left + right - fr.whole) <= fr.tol || fr.depth >= max_depth) {
      total += left + right;
    } else {
      stack.push_back({fr.a, m, left, 0.5 * fr.tol, fr.depth + 1});
      stack.push_back({m, fr.b, right, 0.5 * fr.tol, fr.depth + 1});
    }
  }
  return total;
}

template <class F>
double integrate_adaptive(const F& f, double a, double b, double abs_tol) {
  return integrate_adaptive(f, a, b, abs_tol, gauss_legendre(64));
}

}  // namespace shepard
