#pragma once

// Brute-force quadrature counterparts of the closed-form reduced-state
// quantities. Everything factorises over Cartesian components, so each 3D
// quantity is a product (or power) of 1D Gauss-Legendre integrals.

#include <array>
#include <functional>

#include "moshinsky/coupling.hpp"

namespace moshinsky::oracle {

/// Two-particle ground-state density matrix in one Cartesian direction,
/// rho(x1, x2; x1', x2'), written in centre-of-mass/relative coordinates.
double two_particle_density_1d(double x1, double x2, double x1p, double x2p, Coupling k);

/// Traces the second particle out of the two-particle density matrix by
/// quadrature (n points per direction) and returns rho_1(r, r2).
double partial_trace_check(Coupling k, const std::array<double, 3>& r,
                           const std::array<double, 3>& r2, int n);

/// (int int rho(x, x')^2 dx dx')^3 by tensor Gauss-Legendre.
double numeric_purity(Coupling k, int n);

/// |<Psi_HF|Psi_0>|^2 from 1D quadratures of the two wave functions.
double numeric_overlap(Coupling k, int n);

/// int_0^r_max 4 pi r^2 f(r) dr.
double radial_integral(const std::function<double(double)>& density, double r_max, int n);

}  // namespace moshinsky::oracle
