#include "fracomplex/grid.hpp"

#include <cmath>

namespace fracomplex {

Signal sample(const UniformGrid& grid, const std::function<Complex(double)>& f) {
  grid.validate();
  Signal s{grid, std::vector<Complex>(grid.n)};
  for (int i = 0; i < grid.n; ++i) s.values[i] = f(grid.x(i));
  return s;
}

UniformGrid centered_grid(int n, double dx) {
  return UniformGrid{n, dx, -0.5 * n * dx};
}

Signal gaussian(const UniformGrid& grid, double sigma) {
  return sample(grid, [sigma](double x) {
    return Complex(std::exp(-x * x / (2.0 * sigma * sigma)), 0.0);
  });
}

double sup_norm(const Signal& s) {
  double m = 0.0;
  for (const auto& v : s.values) m = std::max(m, std::abs(v));
  return m;
}

double sup_diff(const Signal& a, const Signal& b) {
  double m = 0.0;
  for (size_t i = 0; i < a.values.size() && i < b.values.size(); ++i)
    m = std::max(m, std::abs(a.values[i] - b.values[i]));
  return m;
}

}  // namespace fracomplex
