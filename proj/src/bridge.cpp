#include "moshinsky/bridge.hpp"

#include <numbers>
#include <string>

#include "moshinsky/oracle/quadrature.hpp"

namespace moshinsky {

namespace {

constexpr double kLn2 = std::numbers::ln2;
constexpr double kSqrt3 = std::numbers::sqrt3;

void require_ecorr(double e, const char* what) {
  if (!(e >= 0.0) || !std::isfinite(e)) {
    throw std::invalid_argument(std::string(what) + ": correlation energy must be finite and >= 0");
  }
}

}  // namespace

Tau Tau::from_ecorr(double e) {
  require_ecorr(e, "Tau::from_ecorr");
  return Tau(e + std::sqrt(2.0 * e * (e + 3.0)));
}

Coupling k_from_ecorr(double e) {
  require_ecorr(e, "k_from_ecorr");
  if (e == 0.0) return Coupling(0.0);
  double lo = 0.0;
  double hi = 1.0;
  while (correlation_energy(Coupling(hi)) < e) {
    lo = hi;
    hi *= 2.0;
    if (!std::isfinite(hi)) throw std::domain_error("k_from_ecorr: correlation energy out of range");
  }
  while (hi - lo > 1e-13) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (correlation_energy(Coupling(mid)) < e) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return Coupling(0.5 * (lo + hi));
}

double entropy_from_ecorr(double e) {
  require_ecorr(e, "entropy_from_ecorr");
  if (e == 0.0) return 0.0;
  const double tau = Tau::from_ecorr(e).value();
  const double root = std::sqrt(2.0 * tau + 3.0);
  const double bracket = 4.0 * kSqrt3 * (tau + 3.0) * std::log(std::sqrt(6.0 * tau + 9.0) + 3.0) -
                         2.0 * kSqrt3 * std::log(6.0) * (tau + 3.0) -
                         2.0 * (kSqrt3 * (tau + 3.0) - 3.0 * root) * std::log(tau) -
                         3.0 * root * std::log(2.0 * tau + 3.0) - 3.0 * root * std::log(12.0);
  return bracket / (root * 2.0 * kLn2);
}

double entropy_from_ecorr_small(double e) {
  if (e == 0.0) return 0.0;
  return (1.0 + std::log(6.0) - std::log(e)) / (2.0 * kLn2) * e;
}

double entropy_from_ecorr_large(double e) {
  if (!(e > 0.0)) throw std::invalid_argument("entropy_from_ecorr_large: e must be > 0");
  return 3.0 * (2.0 + std::asinh(1.0) - std::log(24.0)) / (2.0 * kLn2) +
         3.0 * std::log(e) / (2.0 * kLn2);
}

double moshinsky_concurrence(Coupling k) { return 1.0 - purity(k); }

double concurrence_from_ecorr(double e) {
  require_ecorr(e, "concurrence_from_ecorr");
  const double root = std::sqrt(e * (e + 3.0));
  const double inner = 2.0 * e + 2.0 * std::numbers::sqrt2 * root + 3.0;
  const double outer = e + std::numbers::sqrt2 * root + 3.0;
  return 1.0 - 3.0 * kSqrt3 * std::pow(inner, 1.5) / (outer * outer * outer);
}

double ecorr_from_concurrence(double c) {
  if (!(c >= 0.0 && c < 1.0)) {
    throw std::invalid_argument("ecorr_from_concurrence: concurrence must lie in [0, 1)");
  }
  if (c == 0.0) return 0.0;
  // u = 1 - c; the radicand u^{4/3} - 3u^{2/3} + 2 factors as
  // (1 - u^{2/3})(2 - u^{2/3}), with 1 - u^{2/3} taken from expm1.
  const double ln_u = std::log1p(-c);
  const double u13 = std::exp(ln_u / 3.0);
  const double u16 = std::exp(ln_u / 6.0);
  const double one_minus_u23 = -std::expm1(2.0 * ln_u / 3.0);
  const double w = std::sqrt(one_minus_u23 * (1.0 + one_minus_u23));
  const double first = std::sqrt(2.0 * c - u13 * (2.0 * w - 3.0) - 2.0);
  return 3.0 * std::exp(-5.0 * ln_u / 6.0) * (first + u16 * (w - 1.0));
}

double ecorr_from_concurrence_series(double c) {
  return c + std::sqrt(2.0 / 3.0) * std::pow(c, 1.5) + 2.0 / 3.0 * c * c;
}

double deviation(DeviationWeight alpha, Coupling k) {
  return alpha.alpha() * entropy(k) - correlation_energy(k);
}

DeviationMoments deviation_moments(int quad_points) {
  if (quad_points < 16) throw std::invalid_argument("deviation_moments: need at least 16 points");
  const auto grid = oracle::gauss_legendre(quad_points, 0.0, 1.0);
  DeviationMoments moments;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const Coupling k(grid.nodes[i]);
    const double s = entropy(k);
    const double e = correlation_energy(k);
    moments.s_squared += grid.weights[i] * s * s;
    moments.s_times_e += grid.weights[i] * s * e;
    moments.e_squared += grid.weights[i] * e * e;
  }
  return moments;
}

double deviation_functional(DeviationWeight alpha, int quad_points) {
  if (quad_points < 16) throw std::invalid_argument("deviation_functional: need at least 16 points");
  const auto grid = oracle::gauss_legendre(quad_points, 0.0, 1.0);
  return grid.integrate([&](double k) {
    const double d = deviation(alpha, Coupling(k));
    return d * d;
  });
}

double alpha_min(int quad_points) {
  if (quad_points < 32) throw std::invalid_argument("alpha_min: need at least 32 points");
  const auto moments = deviation_moments(quad_points);
  return moments.s_times_e / moments.s_squared;
}

SweepTable relative_deviation_tables(std::span<const double> grid, int quad_points) {
  const DeviationWeight alpha(alpha_min(quad_points));
  SweepTable table({"K", "entropy", "ecorr", "deviation", "rel_to_entropy", "rel_to_ecorr"});
  for (const double kv : grid) {
    if (!(kv > 0.0)) {
      throw std::invalid_argument("relative_deviation_tables: K must be > 0 (ratios are 0/0 at K = 0)");
    }
    const Coupling k(kv);
    const double s = entropy(k);
    const double e = correlation_energy(k);
    const double d = alpha.alpha() * s - e;
    table.add_row({kv, s, e, d, std::abs(d) / s, std::abs(d) / e});
  }
  return table;
}

SweepTable overlap_vs_entropy_curve(std::span<const double> grid) {
  SweepTable table({"entropy", "overlap", "K"});
  for (const double kv : grid) {
    const Coupling k(kv);
    table.add_row({entropy(k), overlap_squared(k), kv});
  }
  return table;
}

}  // namespace moshinsky
