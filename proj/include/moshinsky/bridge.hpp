#pragma once

// Entanglement and concurrence of the Moshinsky ground state expressed as
// functions of the correlation energy, and the least-squares comparison
// Delta(alpha, K) = alpha S(K) - E_corr(K).

#include <cmath>
#include <span>
#include <stdexcept>

#include "moshinsky/core.hpp"
#include "moshinsky/sweep_table.hpp"

namespace moshinsky {

/// Scale between entropy (bits) and energy units in Delta.
class DeviationWeight {
 public:
  explicit DeviationWeight(double alpha) : alpha_(alpha) {
    if (!(alpha > 0.0) || !std::isfinite(alpha)) {
      throw std::invalid_argument("deviation weight alpha must be finite and > 0");
    }
  }
  double alpha() const { return alpha_; }

 private:
  double alpha_;
};

/// tau = E + sqrt(2 E (E + 3)); along the ground-state curve this equals
/// (3/2)(sqrt(1 + 2K) - 1).
class Tau {
 public:
  static Tau from_ecorr(double e);
  double value() const { return tau_; }

 private:
  explicit Tau(double tau) : tau_(tau) {}
  double tau_;
};

/// Unique K >= 0 with correlation_energy(K) == e (bisection).
Coupling k_from_ecorr(double e);

double entropy_from_ecorr(double e);
double entropy_from_ecorr_small(double e);
double entropy_from_ecorr_large(double e);

/// 1 - Tr[rho_1^2]
double moshinsky_concurrence(Coupling k);
double concurrence_from_ecorr(double e);
/// Inverse of concurrence_from_ecorr on [0, 1).
double ecorr_from_concurrence(double c);
/// c + sqrt(2/3) c^{3/2} + (2/3) c^2
double ecorr_from_concurrence_series(double c);

double deviation(DeviationWeight alpha, Coupling k);

/// I[alpha] = A alpha^2 - 2 B alpha + D with A = int S^2, B = int S E,
/// D = int E^2 over K in [0, 1].
struct DeviationMoments {
  double s_squared = 0.0;
  double s_times_e = 0.0;
  double e_squared = 0.0;
};

inline constexpr int kDefaultQuadPoints = 64;

DeviationMoments deviation_moments(int quad_points = kDefaultQuadPoints);
double deviation_functional(DeviationWeight alpha, int quad_points = kDefaultQuadPoints);
double alpha_min(int quad_points = kDefaultQuadPoints);

/// Columns K, entropy, ecorr, deviation, rel_to_entropy, rel_to_ecorr at
/// alpha = alpha_min(quad_points). Every K must be > 0.
SweepTable relative_deviation_tables(std::span<const double> grid,
                                     int quad_points = kDefaultQuadPoints);

/// Columns entropy, overlap, K. The grid must be strictly increasing.
SweepTable overlap_vs_entropy_curve(std::span<const double> grid);

}  // namespace moshinsky
