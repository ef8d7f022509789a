#pragma once

#include <complex>

#include "fracomplex/errors.hpp"

namespace fracomplex {

using Complex = std::complex<double>;

// Euler-Mascheroni constant, 30 digits.
inline constexpr double kEulerGamma = 0.577215664901532860606512090082;

// Gamma(z) for complex z. Throws PoleError within 1e-12 of a non-positive
// integer. Relative accuracy ~1e-13 for |z| <= 50 (Lanczos + reflection).
Complex complex_gamma(Complex z);

// log Gamma(z) on the principal branch, Re z > 0 only (no reflection).
Complex complex_log_gamma_right(Complex z);

// Upper incomplete gamma Gamma(s, z), principal branch of z^s, continuous in
// z on C minus the cut (-inf, 0]. Throws BranchError on the cut and
// DomainError for z = 0 with Re(s) <= 0.
Complex upper_incomplete_gamma(Complex s, Complex z);

// gamma*(s, z) = lower_gamma(s, z) / z^s, the entire-in-s scaled lower branch.
// Used where Gamma(s) - Gamma(s,z) would cancel. Same cut rules as above,
// except z = 0 is fine (returns 1/s).
Complex scaled_lower_incomplete_gamma(Complex s, Complex z);

// E1(z) on the principal branch, z off (-inf, 0].
Complex exp_integral_e1(Complex z);

// (sign * i * x)^w = exp(w * (log|x| + i*(pi/2)*sign*sgn(x))), x != 0.
// sign is +1 or -1. The branch convention of all kernel formulas.
Complex principal_power_i(double x, int sign, Complex w);

// Inverse Fourier transform of w^beta * 1_{w>1} evaluated at x != 0:
//   (1/2pi) * Gamma(beta+1, -ix) / (-ix)^(beta+1),
// with the beta = -1 case routed through E1. beta in {-2,-3,...} is a
// DomainError. The w < -1 mirror is the same function at -x.
Complex inv_fourier_truncated_power(Complex beta, double x);
Complex inv_fourier_truncated_power_mirror(Complex beta, double x);

}  // namespace fracomplex
