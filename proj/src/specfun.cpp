#include "shepard/specfun.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "shepard/quadrature.hpp"

namespace shepard {

namespace {

bool near_nonpositive_integer(double x, double* rounded = nullptr) {
  const double r = std::round(x);
  if (rounded) *rounded = r;
  return r <= 0.0 && std::abs(x - r) < 1e-12;
}

}  // namespace

double log_gamma(double x) {
  if (!(x > 0.0)) {
    throw std::invalid_argument("log_gamma: argument must be positive, got " +
                                std::to_string(x));
  }
  return std::lgamma(x);
}

double beta_fn(double x, double y) {
  if (!(x > 0.0) || !(y > 0.0)) {
    throw std::invalid_argument("beta_fn: arguments must be positive");
  }
  return std::exp(log_gamma(x) + log_gamma(y) - log_gamma(x + y));
}

double pochhammer(double a, int n) {
  if (n < 0) throw std::invalid_argument("pochhammer: n must be >= 0");
  double prod = 1.0;
  for (int k = 0; k < n; ++k) prod *= a + k;
  return prod;
}

double ball_volume(int d, double t) {
  if (d < 1) throw std::invalid_argument("ball_volume: dimension must be >= 1");
  if (t < 0.0) throw std::invalid_argument("ball_volume: radius must be >= 0");
  if (t == 0.0) return 0.0;
  return std::exp(0.5 * d * std::log(std::numbers::pi) + d * std::log(t) -
                  log_gamma(0.5 * d + 1.0));
}

Gauss2F1Series gauss_2f1_series_full(const HypergeometricParams& p, double tol) {
  if (!(std::abs(p.z) < 1.0)) {
    throw std::invalid_argument("gauss_2f1_series: requires |z| < 1");
  }
  if (!(tol > 0.0)) throw std::invalid_argument("gauss_2f1_series: tol must be > 0");
  if (near_nonpositive_integer(p.c)) {
    throw std::invalid_argument(
        "gauss_2f1_series: c must not be a non-positive integer");
  }
  double a_round = 0.0;
  const bool terminating = near_nonpositive_integer(p.a, &a_round);

  Gauss2F1Series out;
  double sum = 1.0, comp = 0.0;  // Kahan accumulator
  double term = 1.0;
  out.terms = 1;
  constexpr int kMaxTerms = 200000;
  for (int n = 0; n < kMaxTerms; ++n) {
    const double fa = terminating ? (a_round + n) : (p.a + n);
    if (terminating && fa == 0.0) {
      out.terminated = true;
      break;
    }
    const double factor = fa * (p.b + n) / ((n + 1.0) * (p.c + n)) * p.z;
    term *= factor;
    if (term == 0.0) {
      out.terminated = true;
      break;
    }
    const double y = term - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    ++out.terms;
    if (!terminating) {
      // Geometric tail estimate from the next term ratio.
      const double ratio = std::abs((p.a + n + 1.0) * (p.b + n + 1.0) /
                                    ((n + 2.0) * (p.c + n + 1.0)) * p.z);
      if (ratio < 1.0 && std::abs(term) * ratio / (1.0 - ratio) < tol) break;
    }
    if (n == kMaxTerms - 1) {
      throw std::runtime_error("gauss_2f1_series: no convergence");
    }
  }
  out.value = sum;
  return out;
}

double gauss_2f1_series(const HypergeometricParams& p, double tol) {
  return gauss_2f1_series_full(p, tol).value;
}

double gauss_2f1_euler(const HypergeometricParams& p, int quad_points) {
  if (!(p.c > p.b && p.b > 0.0)) {
    throw std::invalid_argument("gauss_2f1_euler: requires c > b > 0");
  }
  if (!(std::abs(p.z) < 1.0)) {
    throw std::invalid_argument("gauss_2f1_euler: requires |z| < 1");
  }
  const double a = p.a, b = p.b, cb = p.c - p.b, z = p.z;
  const auto& rule = gauss_legendre(quad_points);
  const auto kernel = [&](double x) { return std::pow(1.0 - z * x, -a); };

  // Panel tolerance relative to the Beta-weight scale of the integral.
  const double tol = std::max(1e-15, 1e-12 * beta_fn(b, cb));

  // [0, 1/2]: the substitution x = u^{1/b} absorbs the x^{b-1} weight.
  double left;
  if (b < 1.0) {
    left = integrate_adaptive(
               [&](double u) {
                 const double x = std::pow(u, 1.0 / b);
                 return std::pow(1.0 - x, cb - 1.0) * kernel(x);
               },
               0.0, std::pow(0.5, b), tol, rule) /
           b;
  } else {
    left = integrate_adaptive(
        [&](double x) {
          return std::pow(x, b - 1.0) * std::pow(1.0 - x, cb - 1.0) * kernel(x);
        },
        0.0, 0.5, tol, rule);
  }

  // [1/2, 1]: the substitution 1 - x = v^{1/(c-b)} absorbs (1-x)^{c-b-1}.
  double right;
  if (cb < 1.0) {
    right = integrate_adaptive(
                [&](double v) {
                  const double x = 1.0 - std::pow(v, 1.0 / cb);
                  return std::pow(x, b - 1.0) * kernel(x);
                },
                0.0, std::pow(0.5, cb), tol, rule) /
            cb;
  } else {
    right = integrate_adaptive(
        [&](double x) {
          return std::pow(x, b - 1.0) * std::pow(1.0 - x, cb - 1.0) * kernel(x);
        },
        0.5, 1.0, tol, rule);
  }

  const double log_norm = log_gamma(p.c) - log_gamma(b) - log_gamma(cb);
  return std::exp(log_norm) * (left + right);
}

}  // namespace shepard
