#pragma once

// Closed-form quantities of the Moshinsky model: two identical 3D harmonic
// oscillators with an extra harmonic coupling K (r1 - r2)^2 / 2.
//
// Entropies are in bits and count only the positional degrees of freedom;
// the spin singlet adds a constant 1 that is never included here.

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

#include "moshinsky/coupling.hpp"

namespace moshinsky {

/// The reduced spectrum in one Cartesian direction is nu_l = big_c * small_c^l;
/// the eigenfunctions carry the Gaussian factor exp(-delta x^2).
struct SpectralCoefficients {
  double big_c = 1.0;
  double small_c = 0.0;
  double delta = 0.5;
};

struct SpectrumEntry {
  double mu = 1.0;
  std::uint64_t degeneracy = 1;
};

/// Eigenvalues mu_k = C^3 c^k of the one-particle density matrix together
/// with their degeneracies (k+1)(k+2)/2. tail_bound bounds both the omitted
/// probability mass and the omitted entropy (bits).
struct ReducedSpectrum {
  std::vector<SpectrumEntry> entries;
  double tail_bound = 0.0;
};

/// Parameters of the 1D reduced kernel
///   rho(x, x') = norm * exp(cross * x x' - diag * (x^2 + x'^2)).
template <typename Real>
struct GaussianKernel {
  Real norm;
  Real cross;
  Real diag;

  Real operator()(Real x, Real x2) const {
    using std::exp;
    return norm * exp(cross * x * x2 - diag * (x * x + x2 * x2));
  }
};

template <typename Real>
GaussianKernel<Real> reduced_kernel_parameters(Real k) {
  using std::sqrt;
  const Real s = sqrt(Real(1) + Real(2) * k);
  const Real pi = std::numbers::pi_v<double>;
  const Real denom = Real(4) * (s + Real(1));
  GaussianKernel<Real> kernel{};
  kernel.norm = sqrt(Real(2) * s / ((s + Real(1)) * pi));
  kernel.cross = (s - Real(1)) * (s - Real(1)) / denom;
  kernel.diag = (k + Real(3) * s + Real(1)) / denom;
  return kernel;
}

double exact_energy(QuantumNumbers q, Coupling k);
double hf_energy(Coupling k);
double correlation_energy(Coupling k);
/// 3K^2/8 - 9K^3/16
double correlation_energy_series(Coupling k);
/// |<Psi_HF|Psi_0>|^2
double overlap_squared(Coupling k);

double density_exact(double r, Coupling k);
double density_hf(double r, Coupling k);

double reduced_kernel_1d(double x, double x2, Coupling k);
double reduced_kernel_3d(const std::array<double, 3>& r, const std::array<double, 3>& r2,
                         Coupling k);

SpectralCoefficients spectral_coefficients(Coupling k);
ReducedSpectrum reduced_spectrum(Coupling k, double tol);
inline std::uint64_t degeneracy(std::uint64_t level) { return (level + 1) * (level + 2) / 2; }

/// Tr[rho_1^2]
double purity(Coupling k);
double entropy(Coupling k);
double entropy_from_spectrum(const ReducedSpectrum& spectrum);
/// -sum_l nu_l log2 nu_l for the one-dimensional factor, summed until the
/// terms vanish in double precision.
double entropy_1d(Coupling k);
double entropy_series_small_k(Coupling k);
double entropy_asymptotic_large_k(Coupling k);

/// Coefficients (ascending powers of x) of P_l with w_l(x) = P_l(x) exp(-delta x^2)
/// an eigenfunction of the 1D reduced kernel. Unit L2 norm, positive leading
/// coefficient. Obtained from the triangular action of the kernel on
/// x^j exp(-delta x^2).
std::vector<double> eigenfunction_coefficients(unsigned l, Coupling k);

/// Upper-triangular matrix (row i, column j, i <= j) of the kernel acting on
/// the monomial basis x^j exp(-delta x^2), truncated to degree max_degree.
std::vector<std::vector<double>> kernel_monomial_action(unsigned max_degree, Coupling k);

}  // namespace moshinsky
