#pragma once

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace moshinsky::oracle {

template <typename Real>
struct QuadratureGrid {
  std::vector<Real> nodes;
  std::vector<Real> weights;
  Real a{};
  Real b{};

  std::size_t size() const { return nodes.size(); }

  template <typename F>
  Real integrate(F&& f) const {
    Real sum = 0;
    for (std::size_t i = 0; i < nodes.size(); ++i) sum += weights[i] * f(nodes[i]);
    return sum;
  }
};

// Gauss-Legendre rule on [a, b], exact for polynomials of degree 2n - 1.
// Roots of P_n by Newton iteration from the Tricomi-style initial guess,
// converged to a few ulps of Real.
template <typename Real = double>
QuadratureGrid<Real> gauss_legendre(int n, Real a, Real b) {
  using std::abs;
  using std::cos;
  if (n < 2) throw std::invalid_argument("gauss_legendre: need n >= 2");
  if (!(a < b)) throw std::invalid_argument("gauss_legendre: need a < b");

  const Real eps = std::numeric_limits<Real>::epsilon();
  const Real pi = std::numbers::pi_v<double>;
  QuadratureGrid<Real> grid;
  grid.nodes.resize(n);
  grid.weights.resize(n);
  grid.a = a;
  grid.b = b;
  const Real mid = (b + a) / 2;
  const Real half = (b - a) / 2;

  // P_n(z) and P_n'(z) by the three-term recurrence.
  const auto legendre = [n](Real z, Real& derivative) {
    Real p0 = 1;
    Real p1 = 0;
    for (int j = 1; j <= n; ++j) {
      const Real p2 = p1;
      p1 = p0;
      p0 = ((2 * j - 1) * z * p1 - (j - 1) * p2) / j;
    }
    derivative = n * (z * p0 - p1) / (z * z - 1);
    return p0;
  };

  const int roots = (n + 1) / 2;
  for (int i = 0; i < roots; ++i) {
    Real z = cos(pi * (Real(i) + Real(0.75)) / (Real(n) + Real(0.5)));
    Real dp = 0;
    int polish = 2;
    for (int iter = 0; iter < 200 && polish > 0; ++iter) {
      const Real step = legendre(z, dp) / dp;
      z -= step;
      if (abs(step) <= 64 * eps) --polish;
    }
    legendre(z, dp);
    const Real w = 2 / ((1 - z * z) * dp * dp);
    grid.nodes[i] = mid - half * z;
    grid.nodes[n - 1 - i] = mid + half * z;
    grid.weights[i] = half * w;
    grid.weights[n - 1 - i] = half * w;
  }
  if (n % 2 == 1) grid.nodes[n / 2] = mid;
  return grid;
}

}  // namespace moshinsky::oracle
