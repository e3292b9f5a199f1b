#pragma once

#include <cmath>
#include <stdexcept>

namespace moshinsky {

/// Dimensionless strength K of the harmonic coupling between the two
/// oscillators. Any K >= 0 is accepted; the physically interesting window
/// is 0 <= K <= 1.
class Coupling {
 public:
  constexpr Coupling() = default;
  explicit Coupling(double k) : k_(k) {
    if (!(k >= 0.0) || !std::isfinite(k)) {
      throw std::invalid_argument("coupling K must be finite and >= 0");
    }
  }

  double k() const { return k_; }

  /// (1 + 2K)^{1/4}
  double chi() const { return std::pow(1.0 + 2.0 * k_, 0.25); }

  /// chi - 1, accurate for small K.
  double chi_minus_one() const { return std::expm1(0.25 * std::log1p(2.0 * k_)); }

  /// sqrt(1 + 2K), the relative-motion frequency.
  double relative_frequency() const { return std::sqrt(1.0 + 2.0 * k_); }

 private:
  double k_ = 0.0;
};

/// Excitation numbers of the centre-of-mass (n) and relative (m) modes.
struct QuantumNumbers {
  unsigned n = 0;
  unsigned m = 0;
};

}  // namespace moshinsky
