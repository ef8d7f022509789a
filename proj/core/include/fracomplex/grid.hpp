#pragma once

#include <functional>
#include <vector>

#include "fracomplex/special_functions.hpp"

namespace fracomplex {

struct UniformGrid {
  int n = 0;        // sample count, >= 2
  double dx = 0.0;  // spacing, > 0
  double x0 = 0.0;  // left endpoint

  void validate() const {
    if (n < 2) throw GridDomain("grid needs at least 2 samples");
    if (!(dx > 0.0)) throw GridDomain("grid spacing must be positive");
  }
  double x(int i) const { return x0 + i * dx; }
  double length() const { return n * dx; }
  // Frequency spacing of the associated spectral grid [-pi/dx, pi/dx).
  double domega() const { return kTwoPi_ / (n * dx); }
  bool operator==(const UniformGrid&) const = default;

private:
  static constexpr double kTwoPi_ = 6.283185307179586476925286766559;
};

struct Signal {
  UniformGrid grid;
  std::vector<Complex> values;

  void validate() const {
    grid.validate();
    if (static_cast<int>(values.size()) != grid.n)
      throw GridDomain("signal length does not match grid");
  }
};

// Sample f on the grid.
Signal sample(const UniformGrid& grid, const std::function<Complex(double)>& f);

// Centered grid helper: n points, spacing dx, midpoint at 0 (x0 = -n*dx/2).
UniformGrid centered_grid(int n, double dx);

// Gaussian exp(-x^2 / (2 sigma^2)) — the workhorse test input.
Signal gaussian(const UniformGrid& grid, double sigma = 1.0);

double sup_norm(const Signal& s);
double sup_diff(const Signal& a, const Signal& b);

}  // namespace fracomplex
