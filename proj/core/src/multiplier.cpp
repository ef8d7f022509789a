#include "fracomplex/multiplier.hpp"

#include <cmath>
#include <string>

namespace fracomplex {

namespace {
constexpr double kHalfPi = 1.570796326794896619231321691640;

Complex power_of_i(Complex w) { return std::exp(w * Complex(0.0, kHalfPi)); }
Complex power_of_minus_i(Complex w) {
  return std::exp(w * Complex(0.0, -kHalfPi));
}
}  // namespace

Complex eval_h(const OperatorParams& params, double omega) {
  if (omega == 0.0) return {0.0, 0.0};
  // |w|^gamma with the real log: exp(gamma * ln|w|).
  Complex mag = std::exp(params.gamma * std::log(std::abs(omega)));
  return (omega > 0.0 ? params.a : params.b) * mag;
}

OperatorParams preset(Preset which, Complex gamma) {
  if (!std::isfinite(gamma.real()) || !std::isfinite(gamma.imag()))
    throw ParamDomain("preset gamma must be finite");
  switch (which) {
    case Preset::fractional_laplacian:
      return {Complex(1, 0), Complex(1, 0), gamma};
    case Preset::riemann_liouville:
      return {power_of_i(gamma), power_of_minus_i(gamma), gamma};
    case Preset::simplified_kernel:
      return {power_of_i(gamma - 1.0), power_of_minus_i(1.0 - gamma), gamma};
  }
  throw UnknownPreset("unreachable");
}

OperatorParams preset(std::string_view name, Complex gamma) {
  if (name == "fractional_laplacian") return preset(Preset::fractional_laplacian, gamma);
  if (name == "riemann_liouville") return preset(Preset::riemann_liouville, gamma);
  if (name == "simplified_kernel") return preset(Preset::simplified_kernel, gamma);
  throw UnknownPreset("no preset named '" + std::string(name) + "'");
}

bool is_one_sided_pair(const OperatorParams& params, double tol) {
  Complex a_ref = power_of_i(params.gamma);
  Complex b_ref = power_of_minus_i(params.gamma);
  return std::abs(params.a - a_ref) <= tol * (1.0 + std::abs(a_ref)) &&
         std::abs(params.b - b_ref) <= tol * (1.0 + std::abs(b_ref));
}

}  // namespace fracomplex
