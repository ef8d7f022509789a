#pragma once

#include "fracomplex/grid.hpp"
#include "fracomplex/multiplier.hpp"

namespace fracomplex {

enum class OperatorKind { derivative, integration, adjoint_integration };

struct KernelSpec {
  OperatorParams params;
  OperatorKind kind = OperatorKind::integration;
  int k = 1;

  void validate() const;  // ParamDomain for gamma in Z, KDomain for bad k
};

// Exact impulse response L{delta(.-tau)}(x) assembled from gamma functions
// and principal powers. SingularPoint at the excluded points (x = tau;
// tau = 0 for integration; x = 0 for the adjoint).
Complex kernel_value(const KernelSpec& spec, double tau, double x);

// One-sided closed forms, valid when (a, b) = (i^gamma, (-i)^gamma):
//   derivative:  (x-tau)_+^{-1-gamma} / Gamma(-gamma)
//   integration: [(x-tau)_+^{gamma-1} - (-tau)_+^{gamma-1} S_k(x/tau)] / Gamma(gamma)
//   adjoint:     [(tau-x)_+^{gamma-1} - (-x)_+^{gamma-1} S_k(tau/x)] / Gamma(gamma)
// with S_k(r) = sum_{j<k} binom(j-gamma, j) r^j. The 1/Gamma form makes the
// integration kinds regular at integer gamma where the binomial weights
// vanish, which is what the simulator's Brownian path relies on.
Complex one_sided_kernel_value(OperatorKind kind, Complex gamma, int k,
                               double tau, double x);

// Generalized binomial binom(j - gamma, j) = Gamma(j-gamma+1) / (j! Gamma(1-gamma)).
Complex binom_j_gamma(int j, Complex gamma);

// Discrete convolution-quadrature of the Schwartz-kernel integral
//   (L u)(x_i) = sum_j u(tau_j) Int_{cell_j} K(tau, x_i) dtau,
// with the power-law factor integrated exactly on every cell (so the
// diagonal singularity needs no special casing) and, for the derivative
// kind, the Marchaud-type jet subtraction plus analytic tail completion.
// Input values are a density on the input grid.
Signal apply_via_kernel(const KernelSpec& spec, const Signal& input,
                        const UniformGrid& out_grid);

struct Lemma5Result {
  Complex lhs;       // damped oscillatory quadrature
  Complex rhs;       // gamma-function closed form
  double lhs_error;  // quadrature error estimate
};

// Both sides of the truncated-power inverse-Fourier identity
//   Int_0^inf w^{gamma-k} (e^{iwt} - sum_{j<k} (iwt)^j/j!) e^{iwx} dw
//   = Gamma(gamma-k+1)/(-i(x+t))^{gamma-k+1}
//     - sum_{j<k} (it)^{k-j-1} Gamma(gamma-j) / ((k-j-1)! (-ix)^{gamma-j}).
Lemma5Result lemma5_check(Complex gamma, int k, double t, double x);

}  // namespace fracomplex
