#pragma once

// Two-site Ising comparison model, parametrised by the normalised
// ferromagnetic coupling lambda.

#include <cmath>
#include <stdexcept>

namespace moshinsky::ising {

class IsingCoupling {
 public:
  explicit IsingCoupling(double lambda) : lambda_(lambda) {
    if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
      throw std::invalid_argument("ising coupling lambda must be finite and >= 0");
    }
  }
  double lambda() const { return lambda_; }

 private:
  double lambda_;
};

/// One-site von Neumann entropy (bits) of the two-site ground state.
double entropy(IsingCoupling lambda);
/// sqrt(4 + lambda^2) - 2
double correlation_energy(IsingCoupling lambda);
/// lambda / sqrt(lambda^2 + 4)
double concurrence(IsingCoupling lambda);

/// Inverse of correlation_energy, sqrt((e + 2)^2 - 4).
IsingCoupling coupling_from_ecorr(double e);
double concurrence_from_ecorr(double e);
double entropy_from_ecorr(double e);
/// Leading behaviour with its logarithmic correction near e = 0.
double entropy_small_ecorr(double e);
/// 1 - 2 / (ln2 e^2)
double entropy_large_ecorr(double e);

}  // namespace moshinsky::ising
