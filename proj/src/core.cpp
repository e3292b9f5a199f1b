#include "moshinsky/core.hpp"

#include <algorithm>
#include <cfloat>
#include <limits>
#include <stdexcept>

namespace moshinsky {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLn2 = std::numbers::ln2;

double binomial(unsigned n, unsigned r) {
  double result = 1.0;
  for (unsigned i = 1; i <= r; ++i) {
    result = result * static_cast<double>(n - r + i) / static_cast<double>(i);
  }
  return result;
}

double double_factorial(int n) {
  double result = 1.0;
  for (int i = n; i > 1; i -= 2) result *= i;
  return result;
}

// Upper bound on the omitted mass and entropy of the levels above `last`.
// Terms beyond last+1 shrink at least geometrically;
// returns infinity when the ratio bound is not below one.
double spectrum_tail(std::uint64_t last, double ln_big_c3, double ln_small_c) {
  const double m = static_cast<double>(last);
  const double ratio_mass = std::exp(ln_small_c) * (m + 4.0) / (m + 2.0);
  const double ratio_entropy = ratio_mass * (m + 2.0) / (m + 1.0);
  if (ratio_entropy >= 1.0) return std::numeric_limits<double>::infinity();

  const double next = m + 1.0;
  const double ln_deg = std::log((next + 1.0) * (next + 2.0) / 2.0);
  const double ln_mu = ln_big_c3 + next * ln_small_c;
  const double mass = std::exp(ln_deg + ln_mu);
  const double bits = -ln_mu / kLn2;
  const double mass_tail = mass / (1.0 - ratio_mass);
  const double entropy_tail = mass * bits / (1.0 - ratio_entropy);
  return std::max(mass_tail, entropy_tail);
}

}  // namespace

double exact_energy(QuantumNumbers q, Coupling k) {
  const double s = k.relative_frequency();
  return 1.5 * (1.0 + s) + q.n + q.m * s;
}

double hf_energy(Coupling k) { return 3.0 * std::sqrt(1.0 + k.k()); }

double correlation_energy(Coupling k) {
  // 3 sqrt(1+K) - 3/2 (1 + sqrt(1+2K)) rationalised twice so that the
  // O(K^2) result does not come from cancellation.
  const double kk = k.k();
  const double s = k.relative_frequency();
  return 4.5 * kk * kk / ((1.0 + kk + s) * (3.0 * std::sqrt(1.0 + kk) + 1.5 * (1.0 + s)));
}

double correlation_energy_series(Coupling k) {
  const double kk = k.k();
  return 0.375 * kk * kk - 0.5625 * kk * kk * kk;
}

double overlap_squared(Coupling k) {
  const double kk = k.k();
  const double h = std::sqrt(1.0 + kk);
  const double s = k.relative_frequency();
  const double denom = kk + (1.0 + h) * (1.0 + s);
  return 64.0 * std::pow(1.0 + kk, 1.5) * std::pow(1.0 + 2.0 * kk, 0.75) /
         (denom * denom * denom);
}

double density_exact(double r, Coupling k) {
  const double s = k.relative_frequency();
  const double norm = std::pow(2.0 * s / (kPi * (s + 1.0)), 1.5);
  return norm * std::exp(-2.0 * s * r * r / (s + 1.0));
}

double density_hf(double r, Coupling k) {
  const double h = std::sqrt(1.0 + k.k());
  return std::pow(h / kPi, 1.5) * std::exp(-h * r * r);
}

double reduced_kernel_1d(double x, double x2, Coupling k) {
  return reduced_kernel_parameters(k.k())(x, x2);
}

double reduced_kernel_3d(const std::array<double, 3>& r, const std::array<double, 3>& r2,
                         Coupling k) {
  const auto kernel = reduced_kernel_parameters(k.k());
  double value = 1.0;
  for (std::size_t i = 0; i < 3; ++i) value *= kernel(r[i], r2[i]);
  return value;
}

SpectralCoefficients spectral_coefficients(Coupling k) {
  const double kk = k.k();
  const double chi = k.chi();
  const double s = k.relative_frequency();
  const double denom = 1.0 + kk + 2.0 * chi + 3.0 * chi * chi + 2.0 * chi * chi * chi;
  SpectralCoefficients coeffs;
  coeffs.big_c = 2.0 * std::numbers::sqrt2 * chi / std::sqrt(denom);
  // 1 + K - sqrt(1+2K) = K^2 / (1 + K + sqrt(1+2K))
  coeffs.small_c = kk * kk / ((1.0 + kk + s) * denom);
  coeffs.delta = 0.5 * chi;
  return coeffs;
}

ReducedSpectrum reduced_spectrum(Coupling k, double tol) {
  if (!(tol > 0.0 && tol < 1.0)) {
    throw std::invalid_argument("reduced_spectrum: tol must lie in (0, 1)");
  }
  const auto coeffs = spectral_coefficients(k);
  const double big_c3 = coeffs.big_c * coeffs.big_c * coeffs.big_c;
  ReducedSpectrum spectrum;
  if (coeffs.small_c == 0.0) {
    spectrum.entries.push_back({big_c3, 1});
    return spectrum;
  }

  const double ln_big_c3 = 3.0 * std::log(coeffs.big_c);
  const double ln_small_c = std::log(coeffs.small_c);
  const double guess = std::ceil(std::log(tol * (1.0 - coeffs.small_c)) / ln_small_c);
  std::uint64_t last = std::max<std::uint64_t>(50, static_cast<std::uint64_t>(std::clamp(guess, 0.0, 1e8)));

  constexpr std::uint64_t kMaxLevels = 50'000'000;
  double bound = spectrum_tail(last, ln_big_c3, ln_small_c);
  while (!(bound < tol)) {
    if (last > kMaxLevels) {
      throw std::runtime_error("reduced_spectrum: tail does not converge; K too large");
    }
    last *= 2;
    bound = spectrum_tail(last, ln_big_c3, ln_small_c);
  }

  // Levels whose eigenvalue is not a normal double contribute nothing
  // representable; fold them into the bound instead.
  const double normal_limit = std::log(DBL_MIN);
  const double first_tiny = std::floor((normal_limit - ln_big_c3) / ln_small_c);
  if (first_tiny >= 1.0 && first_tiny - 1.0 < static_cast<double>(last)) {
    last = static_cast<std::uint64_t>(first_tiny) - 1;
    bound = spectrum_tail(last, ln_big_c3, ln_small_c);
  }

  spectrum.entries.reserve(last + 1);
  for (std::uint64_t level = 0; level <= last; ++level) {
    const double mu = big_c3 * std::pow(coeffs.small_c, static_cast<double>(level));
    spectrum.entries.push_back({mu, degeneracy(level)});
  }
  spectrum.tail_bound = bound;
  return spectrum;
}

double purity(Coupling k) {
  const double s = k.relative_frequency();
  const double denom = 1.0 + s;
  return 8.0 * std::pow(1.0 + 2.0 * k.k(), 0.75) / (denom * denom * denom);
}

double entropy(Coupling k) {
  if (k.k() < 1e-12) return 0.0;
  // chi = 1 + eps; the bracket is rewritten so the ln 2 pieces combine into
  // 2 ln2 eps^2 and the remaining logs are evaluated with log1p.
  const double eps = k.chi_minus_one();
  const double chi = 1.0 + eps;
  const double bracket = 2.0 * kLn2 * eps * eps + 2.0 * (1.0 + chi * chi) * std::log1p(0.5 * eps) -
                         2.0 * chi * std::log1p(eps) - eps * eps * std::log(eps * (2.0 + eps));
  return 3.0 / (2.0 * kLn2) * bracket / chi;
}

double entropy_from_spectrum(const ReducedSpectrum& spectrum) {
  double sum = 0.0;
  for (const auto& entry : spectrum.entries) {
    if (entry.mu > 0.0 && entry.mu < 1.0) {
      sum -= static_cast<double>(entry.degeneracy) * entry.mu * std::log2(entry.mu);
    }
  }
  return sum;
}

double entropy_1d(Coupling k) {
  const auto coeffs = spectral_coefficients(k);
  double sum = 0.0;
  double nu = coeffs.big_c;
  for (int level = 0; level < 100000 && nu > 0.0; ++level) {
    const double term = -nu * std::log2(nu);
    sum += term;
    if (level > 0 && term < 1e-300) break;
    nu *= coeffs.small_c;
  }
  return sum;
}

double entropy_series_small_k(Coupling k) {
  const double kk = k.k();
  if (kk == 0.0) return 0.0;
  const double k2 = kk * kk;
  return (0.75 + 3.0 / (16.0 * kLn2)) * k2 - 1.5 * k2 * kk +
         (177.0 / 64.0 - 189.0 / (512.0 * kLn2)) * k2 * k2 -
         3.0 * k2 * (16.0 - 32.0 * kk + 59.0 * k2) / (128.0 * kLn2) * std::log(kk);
}

double entropy_asymptotic_large_k(Coupling k) {
  return 3.0 * std::log(k.k()) / (4.0 * kLn2) - 21.0 / 4.0 + 3.0 / kLn2;
}

std::vector<std::vector<double>> kernel_monomial_action(unsigned max_degree, Coupling k) {
  const auto kernel = reduced_kernel_parameters(k.k());
  const double delta = 0.5 * k.chi();
  const double p = kernel.diag + delta;
  const double scale = kernel.norm * std::sqrt(kPi / p);
  const double q = kernel.cross / (2.0 * p);

  const unsigned size = max_degree + 1;
  std::vector<std::vector<double>> action(size, std::vector<double>(size, 0.0));
  for (unsigned j = 0; j < size; ++j) {
    for (unsigned gap = 0; gap <= j; gap += 2) {
      const unsigned i = j - gap;
      action[i][j] = scale * binomial(j, gap) * std::pow(q, static_cast<double>(i)) *
                     double_factorial(static_cast<int>(gap) - 1) /
                     std::pow(2.0 * p, 0.5 * gap);
    }
  }
  return action;
}

std::vector<double> eigenfunction_coefficients(unsigned l, Coupling k) {
  const auto kernel = reduced_kernel_parameters(k.k());
  const double delta = 0.5 * k.chi();
  const double p = kernel.diag + delta;
  const double q = kernel.cross / (2.0 * p);

  // Back substitution in the triangular system. The common factor
  // norm * sqrt(pi/p) * q^i is divided out so the recursion stays regular at
  // K = 0 where all higher eigenvalues coincide at zero.
  std::vector<double> coeffs(l + 1, 0.0);
  coeffs[l] = 1.0;
  for (int i = static_cast<int>(l) - 2; i >= 0; i -= 2) {
    double sum = 0.0;
    for (unsigned j = static_cast<unsigned>(i) + 2; j <= l; j += 2) {
      const unsigned gap = j - static_cast<unsigned>(i);
      sum += binomial(j, gap) * double_factorial(static_cast<int>(gap) - 1) /
             std::pow(2.0 * p, 0.5 * gap) * coeffs[j];
    }
    coeffs[i] = sum / (std::pow(q, static_cast<double>(l - i)) - 1.0);
  }

  // || P exp(-delta x^2) ||^2 = sum_ij c_i c_j Gamma((i+j+1)/2) (2 delta)^{-(i+j+1)/2}
  double norm2 = 0.0;
  for (unsigned i = 0; i <= l; ++i) {
    for (unsigned j = 0; j <= l; ++j) {
      if ((i + j) % 2 != 0) continue;
      const double half = 0.5 * (i + j + 1);
      norm2 += coeffs[i] * coeffs[j] * std::tgamma(half) * std::pow(2.0 * delta, -half);
    }
  }
  const double inv = 1.0 / std::sqrt(norm2);
  for (auto& c : coeffs) c *= inv;
  return coeffs;
}

}  // namespace moshinsky
