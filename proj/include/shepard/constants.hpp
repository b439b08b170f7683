#pragma once

#include <cstddef>

#include "shepard/kernels.hpp"

namespace shepard {

// Closed-form constant next to its numerically summed series counterpart.
// The closed form is not provably an upper bound of the series near the
// hypothesis boundary, so callers that need a certified bound take the max.
struct ConstantPair {
  double closed_form = 0.0;
  double series = 0.0;
  double bound() const {
    return closed_form > series ? closed_form : series;
  }
};

// Uniform-boundedness constant of the kernel sums, hypothesis
// alpha > (d+1)/2:
//   closed_form = 1 + sum_{k=1}^d C(d,k) (2a-k+2)/(2a-k+1)
//   series      = 1 + sum_{j>=1} [(j+1)^d - j^d] j^{-2a}.
ConstantPair operator_norm_constant(double alpha, int d);

// Error-estimate constant, hypothesis alpha > (d+2)/2:
//   closed_form = sum_{k=0}^d C(d+1,k) (2a-k+2)/(2a-k+1) - 1/(2a-d+1)
//   series      = 1 + sum_{j>=1} [(j+1)^{d+1} - (j+1) j^d] j^{-2a}.
ConstantPair jackson_constant(double alpha, int d);

// Fully assembled coefficient of the Jackson-type bound
//   sup |F_n - f| <= coefficient * omega(f, n^{-1/d})
// for a set with separation constant c and fill constant C (the same C that
// defines the dilation beta_n = C^{-1} n^{1/d}).
struct ErrorBudget {
  double packing = 0.0;           // annulus_packing_constant(d, c, C)
  ConstantPair op_norm;           // operator-norm constant
  ConstantPair jackson;           // error constant
  double coefficient_closed = 0.0;  // kappa/m1 (C+1) packing * jackson closed
  double coefficient_series = 0.0;  // same with the series value
  double coefficient = 0.0;         // max of the two (certified)
  double modulus_arg = 0.0;         // n^{-1/d}
  double c_used = 0.0;
  double C_used = 0.0;
};

ErrorBudget assemble_error_budget(const KernelSpec& kernel, int d, double c,
                                  double C, std::size_t n);

}  // namespace shepard
