#pragma once

#include <functional>
#include <optional>

#include "fracomplex/grid.hpp"
#include "fracomplex/multiplier.hpp"

namespace fracomplex {

struct SpectralProfile {
  std::vector<double> freqs;          // ascending, m*domega for m in [-n/2, n/2)
  std::vector<Complex> values;        // continuous-transform estimates
  std::vector<Complex> derivs_at_zero;  // phi_hat^{(j)}(0), j = 0..k-1
};

// Discrete estimate of the continuous Fourier transform (trapezoid weights
// behind a fast transform) plus the spectral jet at 0 computed from moment
// integrals Int (-ix)^j phi(x) dx. When an analytic reference transform is
// supplied, throws GridTooCoarse if the reference carries more than 1e-6 of
// its energy above the Nyquist band.
SpectralProfile spectral_profile(
    const Signal& signal, int k,
    const std::function<Complex(double)>* reference = nullptr);

// phi_hat^{(j)}(0) for j < count, by the moment formula.
std::vector<Complex> spectral_moments(const Signal& signal, int count);

// D_{a,b}^gamma via the Fourier multiplier h на the discrete band. Inputs
// with polynomial trends of degree < Re(gamma) are detrended first (h kills
// those components exactly in the continuum).
Signal apply_derivative(const OperatorParams& params, const Signal& signal);

// I_{a,b}^{gamma;k}. k = 0 (Re gamma < 1) collapses to the convolution
// D^{-gamma}_{1/a,1/b}.
Signal apply_integration(const OperatorParams& params, int k,
                         const Signal& signal);

// I*^{gamma;k}: jet-subtracted spectrum divided by h(-omega), with an
// analytic completion of the polynomial tail beyond the Nyquist band.
// k = 0 (Re gamma < 1) collapses to D^{-gamma}_{1/b,1/a}.
Signal apply_adjoint_integration(const OperatorParams& params, int k,
                                 const Signal& signal);

struct TailFit {
  double slope = 0.0;
  double r2 = 0.0;
  int n_points = 0;
};

// Least-squares slope of log|s(x)| against log|x| over x in [x_lo, x_hi]
// (positive side of the grid).
TailFit measure_tail_exponent(const Signal& signal, double x_lo, double x_hi);

}  // namespace fracomplex
