#include "moshinsky/ising.hpp"

#include <numbers>
#include <string>

namespace moshinsky::ising {

namespace {

constexpr double kLn2 = std::numbers::ln2;

void require_nonnegative(double e, const char* what) {
  if (!(e >= 0.0) || !std::isfinite(e)) {
    throw std::invalid_argument(std::string(what) + ": correlation energy must be finite and >= 0");
  }
}

// Binary entropy of the ground-state Schmidt weights 1/2 +- 1/root with
// root = sqrt(4 + lambda^2). The lower weight is written as
// (root - 2) / (2 root) to avoid cancellation at small lambda.
double entropy_from_root(double root, double lambda) {
  if (lambda == 0.0) return 0.0;
  const double low = lambda * lambda / (2.0 * root * (root + 2.0));
  const double high = 1.0 - low;
  return -(low * std::log2(low) + high * std::log2(high));
}

}  // namespace

double entropy(IsingCoupling lambda) {
  const double l = lambda.lambda();
  return entropy_from_root(std::sqrt(4.0 + l * l), l);
}

double correlation_energy(IsingCoupling lambda) {
  const double l = lambda.lambda();
  return l * l / (std::sqrt(4.0 + l * l) + 2.0);
}

double concurrence(IsingCoupling lambda) {
  const double l = lambda.lambda();
  return l / std::sqrt(l * l + 4.0);
}

IsingCoupling coupling_from_ecorr(double e) {
  require_nonnegative(e, "coupling_from_ecorr");
  return IsingCoupling(std::sqrt(e * (e + 4.0)));
}

double concurrence_from_ecorr(double e) {
  require_nonnegative(e, "concurrence_from_ecorr");
  return std::sqrt(e * (e + 4.0)) / (e + 2.0);
}

double entropy_from_ecorr(double e) {
  require_nonnegative(e, "entropy_from_ecorr");
  return entropy_from_root(e + 2.0, std::sqrt(e * (e + 4.0)));
}

double entropy_small_ecorr(double e) {
  if (e == 0.0) return 0.0;
  return (1.0 + 2.0 * kLn2 - std::log(e)) / (4.0 * kLn2) * e;
}

double entropy_large_ecorr(double e) {
  if (!(e > 0.0)) throw std::invalid_argument("entropy_large_ecorr: e must be > 0");
  return 1.0 - 2.0 / (kLn2 * e * e);
}

}  // namespace moshinsky::ising
