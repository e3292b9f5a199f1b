#include "moshinsky/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <memory>
#include <numbers>
#include <stdexcept>

#include "moshinsky/bridge.hpp"
#include "moshinsky/core.hpp"
#include "moshinsky/ising.hpp"
#include "moshinsky/oracle/nystrom.hpp"
#include "moshinsky/oracle/traces.hpp"

namespace moshinsky {

namespace {

using Check = std::pair<std::string, std::function<double()>>;

double max_over_grid(const std::function<double(Coupling)>& error) {
  double worst = 0.0;
  for (double kv : standard_k_grid()) worst = std::max(worst, error(Coupling(kv)));
  return worst;
}

std::vector<Check> analytic_checks() {
  std::vector<Check> checks;
  checks.emplace_back("spectrum normalisation C/(1-c) = 1", [] {
    return max_over_grid([](Coupling k) {
      const auto c = spectral_coefficients(k);
      return std::abs(c.big_c / (1.0 - c.small_c) - 1.0);
    });
  });
  checks.emplace_back("purity closed form vs C^6/(1-c^2)^3", [] {
    return max_over_grid([](Coupling k) {
      const auto c = spectral_coefficients(k);
      const double q = 1.0 - c.small_c * c.small_c;
      return std::abs(purity(k) - std::pow(c.big_c, 6) / (q * q * q));
    });
  });
  checks.emplace_back("purity closed form vs sum deg mu^2", [] {
    return max_over_grid([](Coupling k) {
      const auto spectrum = reduced_spectrum(k, 1e-14);
      double sum = 0.0;
      for (const auto& e : spectrum.entries) sum += static_cast<double>(e.degeneracy) * e.mu * e.mu;
      return std::abs(purity(k) - sum);
    });
  });
  checks.emplace_back("entropy closed form vs spectral sum", [] {
    return max_over_grid([](Coupling k) {
      return std::abs(entropy(k) - entropy_from_spectrum(reduced_spectrum(k, 1e-12)));
    });
  });
  checks.emplace_back("entropy additivity S_3D = 3 S_1D", [] {
    return max_over_grid([](Coupling k) { return std::abs(entropy(k) - 3.0 * entropy_1d(k)); });
  });
  checks.emplace_back("Ritz bound E_HF >= E_00 (violation)", [] {
    return max_over_grid([](Coupling k) { return std::max(0.0, exact_energy({}, k) - hf_energy(k)); });
  });
  checks.emplace_back("kernel symmetry", [] {
    return max_over_grid([](Coupling k) {
      double worst = 0.0;
      for (double x = -3.0; x <= 3.0; x += 0.75) {
        for (double y = -2.5; y <= 2.5; y += 1.25) {
          worst = std::max(worst, std::abs(reduced_kernel_1d(x, y, k) - reduced_kernel_1d(y, x, k)));
        }
      }
      return worst;
    });
  });
  checks.emplace_back("triangular eigenproblem residual, l <= 5", [] {
    return max_over_grid([](Coupling k) {
      const auto action = kernel_monomial_action(5, k);
      const auto c = spectral_coefficients(k);
      double worst = 0.0;
      for (unsigned l = 0; l <= 5; ++l) {
        const auto p = eigenfunction_coefficients(l, k);
        const double nu = c.big_c * std::pow(c.small_c, l);
        for (unsigned i = 0; i <= l; ++i) {
          double image = 0.0;
          for (unsigned j = i; j <= l; ++j) image += action[i][j] * p[j];
          worst = std::max(worst, std::abs(image - nu * p[i]));
        }
      }
      return worst;
    });
  });
  return checks;
}

std::vector<Check> oracle_checks() {
  // Both Nystrom checks share one diagonalisation per grid point.
  auto spectra = std::make_shared<std::vector<std::vector<double>>>();
  const auto spectrum_at = [spectra](std::size_t index) -> const std::vector<double>& {
    if (spectra->empty()) {
      for (double kv : standard_k_grid()) {
        spectra->push_back(oracle::nystrom_spectrum(oracle::NystromProblem::with_auto_width(Coupling(kv), 200)));
      }
    }
    return (*spectra)[index];
  };

  std::vector<Check> checks;
  checks.emplace_back("Nystrom top-6 eigenvalues vs C c^l (relative)", [spectrum_at] {
    double worst = 0.0;
    const auto grid = standard_k_grid();
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const auto& values = spectrum_at(i);
      const auto c = spectral_coefficients(Coupling(grid[i]));
      for (int l = 0; l < 6; ++l) {
        const double nu = c.big_c * std::pow(c.small_c, l);
        const double err = nu > 0.0 ? std::abs(values[l] - nu) / nu : std::abs(values[l]);
        worst = std::max(worst, err);
      }
    }
    return worst;
  });
  checks.emplace_back("Nystrom trace vs kernel diagonal quadrature", [spectrum_at] {
    double worst = 0.0;
    const auto grid = standard_k_grid();
    for (std::size_t i = 0; i < grid.size(); ++i) {
      double sum = 0.0;
      for (double v : spectrum_at(i)) sum += v;
      const auto problem = oracle::NystromProblem::with_auto_width(Coupling(grid[i]), 200);
      worst = std::max(worst, std::abs(sum - oracle::kernel_trace_quadrature(problem)));
    }
    return worst;
  });
  checks.emplace_back("partial trace vs reduced kernel", [] {
    const std::array<std::array<double, 3>, 3> points{{{0.3, -0.2, 0.5}, {-0.7, 0.4, 0.1}, {1.1, 0.0, -0.6}}};
    return max_over_grid([&](Coupling k) {
      double worst = 0.0;
      for (const auto& r : points) {
        for (const auto& r2 : points) {
          worst = std::max(worst, std::abs(oracle::partial_trace_check(k, r, r2, 64) -
                                           reduced_kernel_3d(r, r2, k)));
        }
      }
      return worst;
    });
  });
  checks.emplace_back("numeric purity vs closed form", [] {
    return max_over_grid([](Coupling k) { return std::abs(oracle::numeric_purity(k, 128) - purity(k)); });
  });
  checks.emplace_back("numeric overlap vs closed form", [] {
    return max_over_grid([](Coupling k) { return std::abs(oracle::numeric_overlap(k, 128) - overlap_squared(k)); });
  });
  checks.emplace_back("density normalisation (exact and HF)", [] {
    return max_over_grid([](Coupling k) {
      const double exact = oracle::radial_integral([&](double r) { return density_exact(r, k); }, 8.0, 96);
      const double hf = oracle::radial_integral([&](double r) { return density_hf(r, k); }, 8.0, 96);
      return std::max(std::abs(exact - 1.0), std::abs(hf - 1.0));
    });
  });
  return checks;
}

std::vector<Check> roundtrip_checks() {
  std::vector<Check> checks;
  checks.emplace_back("k_from_ecorr(E_corr(K)) = K", [] {
    return max_over_grid([](Coupling k) { return std::abs(k_from_ecorr(correlation_energy(k)).k() - k.k()); });
  });
  checks.emplace_back("entropy_from_ecorr(E_corr(K)) = S(K)", [] {
    return max_over_grid([](Coupling k) { return std::abs(entropy_from_ecorr(correlation_energy(k)) - entropy(k)); });
  });
  checks.emplace_back("concurrence_from_ecorr(E_corr(K)) = 1 - purity", [] {
    return max_over_grid([](Coupling k) {
      return std::abs(concurrence_from_ecorr(correlation_energy(k)) - moshinsky_concurrence(k));
    });
  });
  checks.emplace_back("tau(E_corr(K)) = (3/2)(sqrt(1+2K) - 1)", [] {
    return max_over_grid([](Coupling k) {
      return std::abs(Tau::from_ecorr(correlation_energy(k)).value() - 1.5 * (k.relative_frequency() - 1.0));
    });
  });
  checks.emplace_back("ecorr_from_concurrence(concurrence_from_ecorr(e)) = e, e in (0, 5]", [] {
    double worst = 0.0;
    for (int i = 1; i <= 100; ++i) {
      const double e = 0.05 * i;
      worst = std::max(worst, std::abs(ecorr_from_concurrence(concurrence_from_ecorr(e)) - e));
    }
    return worst;
  });
  checks.emplace_back("ising concurrence_from_ecorr(E_corr(lambda)) = concurrence(lambda)", [] {
    double worst = 0.0;
    for (int i = 0; i <= 100; ++i) {
      const ising::IsingCoupling l(0.1 * i);
      worst = std::max(worst, std::abs(ising::concurrence_from_ecorr(ising::correlation_energy(l)) -
                                       ising::concurrence(l)));
    }
    return worst;
  });
  checks.emplace_back("ising entropy_from_ecorr(E_corr(lambda)) = entropy(lambda)", [] {
    double worst = 0.0;
    for (int i = 0; i <= 100; ++i) {
      const ising::IsingCoupling l(0.1 * i);
      worst = std::max(worst, std::abs(ising::entropy_from_ecorr(ising::correlation_energy(l)) -
                                       ising::entropy(l)));
    }
    return worst;
  });
  return checks;
}

void run_suite(const std::vector<Check>& checks, double tol, std::vector<CheckResult>& out) {
  for (const auto& [name, fn] : checks) out.push_back({name, fn(), tol});
}

}  // namespace

std::vector<double> standard_k_grid() {
  std::vector<double> grid;
  for (int i = 0; i <= 10; ++i) grid.push_back(0.1 * i);
  return grid;
}

bool is_verify_suite(const std::string& suite) {
  return suite == "all" || suite == "analytic" || suite == "oracle" || suite == "roundtrip";
}

double default_tolerance(const std::string& suite) {
  if (suite == "analytic") return 1e-10;
  if (suite == "oracle") return 1e-8;
  if (suite == "roundtrip") return 1e-9;
  throw std::invalid_argument("no default tolerance for suite " + suite);
}

std::vector<CheckResult> run_verify(const std::string& suite, std::optional<double> tol) {
  if (!is_verify_suite(suite)) throw std::invalid_argument("unknown verify suite " + suite);
  if (tol && !(*tol > 0.0)) throw std::invalid_argument("verify tolerance must be > 0");
  std::vector<CheckResult> results;
  const auto tolerance = [&](const char* name) { return tol.value_or(default_tolerance(name)); };
  if (suite == "analytic" || suite == "all") run_suite(analytic_checks(), tolerance("analytic"), results);
  if (suite == "oracle" || suite == "all") run_suite(oracle_checks(), tolerance("oracle"), results);
  if (suite == "roundtrip" || suite == "all") run_suite(roundtrip_checks(), tolerance("roundtrip"), results);
  return results;
}

}  // namespace moshinsky
