#include "moshinsky/oracle/traces.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "moshinsky/core.hpp"
#include "moshinsky/oracle/quadrature.hpp"

namespace moshinsky::oracle {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

double two_particle_density_1d(double x1, double x2, double x1p, double x2p, Coupling k) {
  const double s = k.relative_frequency();
  const double inv_root2 = 1.0 / std::numbers::sqrt2;
  const double centre = (x1 + x2) * inv_root2;
  const double centre_p = (x1p + x2p) * inv_root2;
  const double rel = (x1 - x2) * inv_root2;
  const double rel_p = (x1p - x2p) * inv_root2;
  return std::sqrt(s) / kPi *
         std::exp(-0.5 * (centre * centre + centre_p * centre_p) - 0.5 * s * (rel * rel + rel_p * rel_p));
}

double partial_trace_check(Coupling k, const std::array<double, 3>& r,
                           const std::array<double, 3>& r2, int n) {
  if (n < 32) throw std::invalid_argument("partial_trace_check: need at least 32 points");
  const double s = k.relative_frequency();
  // The integrand in the traced coordinate t is a Gaussian of rate (1+s)/2
  // centred at (s-1)(x + x')/(2(1+s)).
  const double width = std::sqrt(100.0 / (1.0 + s));
  double value = 1.0;
  for (std::size_t d = 0; d < 3; ++d) {
    const double centre = (s - 1.0) * (r[d] + r2[d]) / (2.0 * (1.0 + s));
    const auto grid = gauss_legendre(n, centre - width, centre + width);
    value *= grid.integrate([&](double t) { return two_particle_density_1d(r[d], t, r2[d], t, k); });
  }
  return value;
}

double numeric_purity(Coupling k, int n) {
  if (n < 64) throw std::invalid_argument("numeric_purity: need at least 64 points");
  const auto kernel = reduced_kernel_parameters(k.k());
  const double width = std::sqrt(46.0 / (2.0 * kernel.diag - kernel.cross));
  const auto grid = gauss_legendre(n, -width, width);
  double sum = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (std::size_t j = 0; j < grid.size(); ++j) {
      const double value = kernel(grid.nodes[i], grid.nodes[j]);
      sum += grid.weights[i] * grid.weights[j] * value * value;
    }
  }
  return sum * sum * sum;
}

double numeric_overlap(Coupling k, int n) {
  if (n < 64) throw std::invalid_argument("numeric_overlap: need at least 64 points");
  const double s = k.relative_frequency();
  const double h = std::sqrt(1.0 + k.k());
  // Per direction: psi_0 = pi^{-1/2} s^{1/4} exp(-X^2/2 - s y^2/2),
  // psi_HF = pi^{-1/2} h^{1/2} exp(-h (X^2 + y^2)/2).
  const auto gaussian = [n](double rate) {
    const double width = std::sqrt(80.0 / rate);
    const auto grid = gauss_legendre(n, -width, width);
    return grid.integrate([rate](double x) { return std::exp(-0.5 * rate * x * x); });
  };
  const double amplitude = std::pow(s, 0.25) * std::sqrt(h) / kPi * gaussian(1.0 + h) * gaussian(s + h);
  const double a3 = amplitude * amplitude * amplitude;
  return a3 * a3;
}

double radial_integral(const std::function<double(double)>& density, double r_max, int n) {
  const auto grid = gauss_legendre(n, 0.0, r_max);
  return grid.integrate([&](double r) { return 4.0 * kPi * r * r * density(r); });
}

}  // namespace moshinsky::oracle
