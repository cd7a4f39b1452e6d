#pragma once

#include <cstdint>

namespace csb {

// Standard normal density and CDF. Absolute error of the CDF is well below
// 1e-12 on |x| <= 8 (erfc-based).
double std_normal_pdf(double x);
double std_normal_cdf(double x);

// Inverse standard normal CDF (Wichura's PPND16), relative error ~1e-15 on
// p in (0,1). p = 0 and p = 1 are rejected.
double inv_std_normal_cdf(double p);

// Regularized lower incomplete gamma P(s, x), series/continued-fraction
// split at x = s + 1. Relative error <= 1e-12 over the tested domain.
double reg_lower_gamma(double s, double x);

// Inverse of P(s, .) in x for p in (0,1): Newton from a Wilson-Hilferty
// start with a bisection safeguard.
double inv_reg_lower_gamma(double s, double p);

// Chi-squared CDF/quantile with k > 0 degrees of freedom.
double chi2_cdf(double y, double k);
double chi2_quantile(double p, double k);

// Poisson CDF P(X <= k) by compensated summation of the probability mass.
double poisson_cdf(std::int64_t k, double lambda);
// Smallest integer k with CDF(k) >= u (u in (0,1]); -1 signals "beyond the
// internal cap" and is treated as +inf by callers.
std::int64_t poisson_quantile_left(double u, double lambda);

// Phi2(x, 0; rho): P(X <= x, Z <= 0) for a standard bivariate normal pair
// with correlation rho, |rho| < 1, via adaptive quadrature of
// phi(s) * Phi(-rho s / sqrt(1 - rho^2)). Absolute error <= 1e-10.
double bvn_cdf_half(double x, double rho);

}  // namespace csb
