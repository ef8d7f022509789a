#pragma once

#include <string_view>

#include "fracomplex/special_functions.hpp"

namespace fracomplex {

// The (a, b, gamma) triple behind every operator: Fourier multiplier
//   h(w) = a * w_+^gamma + b * w_-^gamma  (w != 0),  h(0) = 0.
struct OperatorParams {
  Complex a{1.0, 0.0};
  Complex b{1.0, 0.0};
  Complex gamma{0.0, 0.0};

  void validate() const {
    if (a == Complex(0.0, 0.0) || b == Complex(0.0, 0.0))
      throw ParamDomain("operator requires a != 0 and b != 0");
    if (!std::isfinite(gamma.real()) || !std::isfinite(gamma.imag()))
      throw ParamDomain("gamma must be finite");
  }
};

// Pointwise evaluation of h. Powers of |w| use the real logarithm; w = 0
// returns exactly 0 regardless of gamma.
Complex eval_h(const OperatorParams& params, double omega);

enum class Preset { fractional_laplacian, riemann_liouville, simplified_kernel };

OperatorParams preset(Preset which, Complex gamma);
OperatorParams preset(std::string_view name, Complex gamma);  // UnknownPreset

// True when (a, b) matches (i^gamma, (-i)^gamma), the pair for which the
// impulse responses collapse to the one-sided real-coefficient forms.
bool is_one_sided_pair(const OperatorParams& params, double tol = 1e-12);

}  // namespace fracomplex
