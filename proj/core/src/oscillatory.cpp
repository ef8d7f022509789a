#include "fracomplex/oscillatory.hpp"

#include <array>
#include <cmath>
#include <vector>

namespace fracomplex {

namespace {

// 16-point Gauss-Legendre on [-1, 1].
constexpr std::array<double, 8> kGlX = {
    0.0950125098376374401853193, 0.2816035507792589132304605,
    0.4580167776572273863424194, 0.6178762444026437484466718,
    0.7554044083550030338951012, 0.8656312023878317438804679,
    0.9445750230732325760779884, 0.9894009349916499325961542,
};
constexpr std::array<double, 8> kGlW = {
    0.1894506104550684962853967, 0.1826034150449235888667637,
    0.1691565193950025381893121, 0.1495959888165767320815017,
    0.1246289712555338720524763, 0.0951585116824927848099251,
    0.0622535239386478928628438, 0.0271524594117540948517806,
};

template <typename F>
Complex gl_panel(const F& f, double lo, double hi) {
  double c = 0.5 * (lo + hi);
  double h = 0.5 * (hi - lo);
  Complex acc{0.0, 0.0};
  for (int i = 0; i < 8; ++i) {
    acc += kGlW[i] * (f(c + h * kGlX[i]) + f(c - h * kGlX[i]));
  }
  return acc * h;
}

Complex integrate_fixed_mu(const std::function<Complex(double)>& g, double mu,
                           double osc_rate, double origin_exponent,
                           double rel_tol) {
  const double w = 0.25 * 3.141592653589793 / std::max(1.0, osc_rate + mu);
  Complex acc{0.0, 0.0};

  auto f = [&](double omega) { return g(omega) * std::exp(-mu * omega); };

  // Graded dyadic panels on (0, w] resolve the w^p endpoint behaviour.
  double p1 = origin_exponent + 1.0;
  int graded = static_cast<int>(std::ceil(53.2 / std::max(0.02, p1)));
  graded = std::min(graded, 20000);
  double hi = w;
  for (int j = 0; j < graded; ++j) {
    double lo = hi * 0.5;
    acc += gl_panel(f, lo, hi);
    hi = lo;
  }

  // Uniform panels out to where the damping has killed everything.
  double scale = std::abs(acc);
  int quiet = 0;
  double lo = w;
  for (long panel = 0; panel < 40000000L; ++panel) {
    Complex c = gl_panel(f, lo, lo + w);
    acc += c;
    lo += w;
    scale = std::max(scale, std::abs(acc));
    if (std::abs(c) < rel_tol * 1e-4 * (scale + 1e-300) && mu * lo > 42.0) {
      if (++quiet >= 3) break;
    } else {
      quiet = 0;
    }
  }
  return acc;
}

}  // namespace

DampedIntegralResult damped_oscillatory_integral(
    const std::function<Complex(double)>& g, double osc_rate,
    double origin_exponent, const DampedIntegralOptions& opts) {
  if (origin_exponent <= -1.0)
    throw DomainError("origin exponent must be > -1 for an integrable endpoint");
  const int J = opts.levels;
  std::vector<double> mu(J);
  std::vector<Complex> q(J);
  for (int j = 0; j < J; ++j) {
    mu[j] = opts.mu0 / std::pow(2.0, j);
    q[j] = integrate_fixed_mu(g, mu[j], osc_rate, origin_exponent, opts.rel_tol);
  }
  // Neville extrapolation to mu = 0.
  std::vector<Complex> t = q;
  Complex prev = t[0];
  for (int m = 1; m < J; ++m) {
    for (int j = 0; j + m < J; ++j) {
      t[j] = t[j + 1] + (t[j + 1] - t[j]) * (mu[j + m] / (mu[j] - mu[j + m]));
    }
    if (m == J - 2) prev = t[0];
  }
  return {t[0], std::abs(t[0] - prev)};
}

}  // namespace fracomplex
