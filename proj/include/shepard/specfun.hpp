#pragma once

namespace shepard {

/// log Gamma(x) for x > 0.
double log_gamma(double x);

/// Euler Beta function B(x, y) = Gamma(x)Gamma(y)/Gamma(x+y), evaluated in
/// log space so large arguments do not overflow.
double beta_fn(double x, double y);

/// Rising factorial (a)_n = a (a+1) ... (a+n-1); the empty product (n = 0)
/// is 1.
double pochhammer(double a, int n);

/// Volume of the d-dimensional Euclidean ball of radius t:
/// pi^{d/2} t^d / Gamma(d/2 + 1).
double ball_volume(int d, double t);

// Arguments of the Gauss hypergeometric function 2F1(a, b; c; z).
// The power series requires |z| < 1 and c not a non-positive integer; the
// Euler-integral route additionally requires c > b > 0.
struct HypergeometricParams {
  double a;
  double b;
  double c;
  double z;
};

struct Gauss2F1Series {
  double value = 0.0;
  int terms = 0;        // nonzero terms summed
  bool terminated = false;  // the series cut off exactly (a a non-positive integer)
};

// Power series sum_{n>=0} (a)_n (b)_n / (n! (c)_n) z^n. Terminates exactly
// when a is a non-positive integer; otherwise stops once the geometric tail
// estimate from the ratio of consecutive terms drops below tol.
Gauss2F1Series gauss_2f1_series_full(const HypergeometricParams& p,
                                     double tol = 1e-14);
double gauss_2f1_series(const HypergeometricParams& p, double tol = 1e-14);

// Euler integral representation
//   Gamma(c)/(Gamma(b)Gamma(c-b)) * int_0^1 x^{b-1}(1-x)^{c-b-1}(1-zx)^{-a} dx
// evaluated with adaptive Gauss-Legendre panels. Endpoint singularities
// (b < 1 or c-b < 1) are removed by power substitutions, so the integrand the
// quadrature sees is smooth. Kept independent of the series path; used as a
// verification oracle.
double gauss_2f1_euler(const HypergeometricParams& p, int quad_points = 64);

}  // namespace shepard
