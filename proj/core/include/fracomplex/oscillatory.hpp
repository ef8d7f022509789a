#pragma once

#include <functional>

#include "fracomplex/special_functions.hpp"

namespace fracomplex {

struct DampedIntegralOptions {
  double mu0 = 0.5;        // largest damping parameter
  int levels = 8;          // mu_j = mu0 / 2^j, j = 0..levels-1
  double rel_tol = 1e-10;  // panel truncation control
  int gl_points = 16;      // nodes per panel (12 or 16)
};

struct DampedIntegralResult {
  Complex value;        // Richardson limit at mu -> 0
  double error_est;     // |last extrapolant - previous|
};

// lim_{mu->0+} Integral_0^inf g(w) e^{-mu w} dw for g with an integrable
// power behaviour |g| ~ w^p (p > -1) at the origin and at most polynomial
// growth killed by the damping. osc_rate bounds |d(arg g)/dw| and sets the
// panel width; each mu level is integrated with graded-then-uniform
// Gauss-Legendre panels and the mu sequence is extrapolated to zero by
// Neville's scheme (the damped integral is analytic in mu at 0+).
DampedIntegralResult damped_oscillatory_integral(
    const std::function<Complex(double)>& g, double osc_rate,
    double origin_exponent, const DampedIntegralOptions& opts = {});

}  // namespace fracomplex
