#include "shepard/constants.hpp"

#include <cmath>
#include <stdexcept>

#include "shepard/pointset.hpp"

namespace shepard {

namespace {

double binomial(int n, int k) {
  double acc = 1.0;
  for (int i = 1; i <= k; ++i) acc *= static_cast<double>(n - k + i) / i;
  return acc;
}

double ipow(double x, int e) {
  double acc = 1.0;
  while (e > 0) {
    if (e & 1) acc *= x;
    x *= x;
    e >>= 1;
  }
  return acc;
}

// Kahan-summed sum_{j>=1} term(j) where term(j) = shell(j) * j^{-2 alpha},
// shell(j) <= growth * (j+1)^{power}. Stops when the integral tail bound of
// the majorant falls below tol.
template <class Term>
double sum_series(const Term& term, double alpha, int power, double growth,
                  double tol) {
  const double decay = 2.0 * alpha - power;  // tail ~ j^{-decay}, decay > 1
  if (!(decay > 1.0)) {
    throw std::invalid_argument("constant series: non-summable parameters");
  }
  double sum = 0.0, comp = 0.0;
  constexpr long long kMaxTerms = 50'000'000;
  for (long long j = 1; j <= kMaxTerms; ++j) {
    const double t = term(static_cast<double>(j));
    const double y = t - comp;
    const double s = sum + y;
    comp = (s - sum) - y;
    sum = s;
    if (j >= 16) {
      const double jd = static_cast<double>(j);
      const double tail = growth * std::pow(2.0, power) *
                          (std::pow(jd, -decay) +
                           std::pow(jd, 1.0 - decay) / (decay - 1.0));
      if (tail < tol) return sum;
    }
  }
  throw std::runtime_error("constant series: tail tolerance not reached");
}

}  // namespace

ConstantPair operator_norm_constant(double alpha, int d) {
  if (d < 1) throw std::invalid_argument("operator_norm_constant: d must be >= 1");
  if (!(alpha > 0.5 * (d + 1))) {
    throw std::invalid_argument(
        "operator_norm_constant: requires alpha > (d+1)/2");
  }
  ConstantPair out;
  double closed = 1.0;
  for (int k = 1; k <= d; ++k) {
    closed += binomial(d, k) * (2.0 * alpha - k + 2.0) / (2.0 * alpha - k + 1.0);
  }
  out.closed_form = closed;
  out.series =
      1.0 + sum_series(
                [alpha, d](double j) {
                  return (std::pow(j + 1.0, d) - std::pow(j, d)) *
                         std::pow(j, -2.0 * alpha);
                },
                alpha, d - 1, static_cast<double>(d), 1e-13);
  return out;
}

ConstantPair jackson_constant(double alpha, int d) {
  if (d < 1) throw std::invalid_argument("jackson_constant: d must be >= 1");
  if (!(alpha > 0.5 * (d + 2))) {
    throw std::invalid_argument("jackson_constant: requires alpha > (d+2)/2");
  }
  ConstantPair out;
  double closed = 0.0;
  for (int k = 0; k <= d; ++k) {
    closed +=
        binomial(d + 1, k) * (2.0 * alpha - k + 2.0) / (2.0 * alpha - k + 1.0);
  }
  closed -= 1.0 / (2.0 * alpha - d + 1.0);
  out.closed_form = closed;
  out.series =
      1.0 + sum_series(
                [alpha, d](double j) {
                  return (std::pow(j + 1.0, d + 1) -
                          (j + 1.0) * std::pow(j, d)) *
                         std::pow(j, -2.0 * alpha);
                },
                alpha, d, static_cast<double>(d + 1), 1e-13);
  return out;
}

ErrorBudget assemble_error_budget(const KernelSpec& kernel, int d, double c,
                                  double C, std::size_t n) {
  if (n == 0) throw std::invalid_argument("error budget: empty point set");
  ErrorBudget out;
  out.c_used = c;
  out.C_used = C;
  out.packing = annulus_packing_constant(d, c, C);
  out.op_norm = operator_norm_constant(kernel.alpha, d);
  out.jackson = jackson_constant(kernel.alpha, d);
  const double front = kernel.kappa / kernel.m1 * (C + 1.0) * out.packing;
  out.coefficient_closed = front * out.jackson.closed_form;
  out.coefficient_series = front * out.jackson.series;
  out.coefficient = front * out.jackson.bound();
  out.modulus_arg =
      std::pow(static_cast<double>(n), -1.0 / static_cast<double>(d));
  return out;
}

}  // namespace shepard
