#include <doctest.h>

#include <cmath>

#include "moshinsky/core.hpp"
#include "moshinsky/oracle/nystrom.hpp"

using namespace moshinsky;
using namespace moshinsky::oracle;
using doctest::Approx;

namespace {

double worst_top6(const std::vector<double>& nu, Coupling k) {
  const auto c = spectral_coefficients(k);
  double worst = 0.0;
  for (int l = 0; l < 6; ++l) {
    const double exact = c.big_c * std::pow(c.small_c, l);
    worst = std::max(worst, std::abs(nu[l] - exact) / exact);
  }
  return worst;
}

}  // namespace

TEST_CASE("problem validation") {
  CHECK_THROWS_AS(NystromProblem(Coupling(1.0), 8, 5.0), std::invalid_argument);
  CHECK_THROWS_AS(NystromProblem(Coupling(1.0), 64, 0.0), std::invalid_argument);
  CHECK(auto_half_width(Coupling(0.0)) == Approx(8.0));
}

TEST_CASE("matrix is symmetric") {
  const auto problem = NystromProblem::with_auto_width(Coupling(0.6), 40);
  const auto b = nystrom_matrix<double>(problem);
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) CHECK(b(i, j) == b(j, i));
}

TEST_CASE("top eigenvalues converge with the node count") {
  const Coupling k(1.0);
  const double e25 = worst_top6(nystrom_spectrum(NystromProblem::with_auto_width(k, 25)), k);
  const double e50 = worst_top6(nystrom_spectrum(NystromProblem::with_auto_width(k, 50)), k);
  const double e100 = worst_top6(nystrom_spectrum(NystromProblem::with_auto_width(k, 100)), k);
  CHECK(e50 < 1e-3 * e25);
  CHECK(e100 < 1e-5 * e50);
  CHECK(e100 < 1e-12);
}

TEST_CASE("default problem meets relative 1e-8 on the top six") {
  for (double kv : {0.1, 0.5, 1.0}) {
    const Coupling k(kv);
    CHECK(worst_top6(nystrom_spectrum(NystromProblem::with_auto_width(k)), k) < 1e-8);
  }
}

TEST_CASE("pure state at K = 0") {
  const auto nu = nystrom_spectrum(NystromProblem::with_auto_width(Coupling(0.0), 60));
  CHECK(nu[0] == Approx(1.0).epsilon(1e-12));
  for (std::size_t i = 1; i < nu.size(); ++i) CHECK(std::abs(nu[i]) < 1e-10);
}

TEST_CASE("eigenvectors in binary128") {
  const auto problem = NystromProblem::with_auto_width(Coupling(0.8), 48);
  const auto b = nystrom_matrix<Quad>(problem);
  const auto e = nystrom_eigen<Quad>(problem, true);
  for (std::size_t col = 0; col < 4; ++col) {
    Quad worst = 0;
    for (std::size_t row = 0; row < b.size(); ++row) {
      Quad bv = 0;
      for (std::size_t j = 0; j < b.size(); ++j) bv += b(row, j) * e.vectors(j, col);
      worst = std::max(worst, Quad(abs(bv - e.values[col] * e.vectors(row, col))));
    }
    CHECK(static_cast<double>(worst) < 1e-28);
  }
  // parity alternates with the level
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < 4; ++col) {
    const double sign = col % 2 == 0 ? 1.0 : -1.0;
    const double lhs = static_cast<double>(e.vectors(0, col));
    const double rhs = static_cast<double>(e.vectors(n - 1, col));
    CHECK(lhs == Approx(sign * rhs).scale(1.0).epsilon(1e-20));
  }
}

TEST_CASE("trace quadrature") {
  for (double kv : {0.0, 0.4, 1.0}) {
    CHECK(kernel_trace_quadrature(NystromProblem::with_auto_width(Coupling(kv))) == Approx(1.0).epsilon(1e-12));
  }
}
