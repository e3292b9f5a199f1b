// One line per acceptance criterion; exit status 1 if any line fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "moshinsky/bridge.hpp"
#include "moshinsky/core.hpp"
#include "moshinsky/figures.hpp"
#include "moshinsky/ising.hpp"
#include "moshinsky/oracle/nystrom.hpp"
#include "moshinsky/oracle/traces.hpp"
#include "moshinsky/verify.hpp"

using namespace moshinsky;

namespace {

int failures = 0;

void report(int id, bool ok, const std::string& title, const std::string& detail) {
  std::printf("[%s] %2d %s: %s\n", ok ? "PASS" : "FAIL", id, title.c_str(), detail.c_str());
  if (!ok) ++failures;
}

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern, a, b, c);
  return buf;
}

std::vector<double> grid(double lo, double hi, int points) {
  return uniform_grid(SweepRange{lo, hi, points});
}

void alpha_reproduction() {
  const double a64 = alpha_min(64);
  const double a128 = alpha_min(128);
  const bool ok = std::abs(a64 - 0.318949) <= 1e-3 && std::abs(a64 - a128) <= 1e-8;
  report(1, ok, "alpha_min", fmt("alpha(64)=%.9f, |alpha(64)-alpha(128)|=%.2e", a64, std::abs(a64 - a128)));
}

void first_excited_probability() {
  const auto c = spectral_coefficients(Coupling(1.0));
  const double mu1 = std::pow(c.big_c, 3) * c.small_c;
  report(2, std::abs(mu1 - 0.0176) <= 2e-4, "mu1(K=1)", fmt("mu1=%.9f (target 0.0176 +- 2e-4)", mu1));
}

void hf_quality() {
  double best = -1.0, arg = -1.0;
  for (double k : grid(0.0, 1.0, 101)) {
    const Coupling c(k);
    const double ratio = correlation_energy(c) / exact_energy({}, c);
    if (ratio > best) {
      best = ratio;
      arg = k;
    }
  }
  const bool ok = std::abs(best - 0.0353) <= 5e-4 && arg == 1.0;
  report(3, ok, "max E_corr/E_exact on [0,1]", fmt("max=%.6f at K=%.2f (target 0.0353 +- 5e-4 at K=1)", best, arg));
}

void entropy_spectral_agreement() {
  double worst = 0.0;
  for (int i = 1; i <= 20; ++i) {
    const Coupling k(0.05 * i);
    worst = std::max(worst, std::abs(entropy(k) - entropy_from_spectrum(reduced_spectrum(k, 1e-14))));
  }
  report(4, worst < 1e-10, "closed-form vs spectral entropy", fmt("max |diff| over K=0.05..1.0: %.2e", worst));
}

void nystrom_eigenvalues() {
  double worst = 0.0;
  for (double kv : {0.1, 0.5, 1.0}) {
    const Coupling k(kv);
    const auto nu = oracle::nystrom_spectrum(oracle::NystromProblem::with_auto_width(k, 200));
    const auto c = spectral_coefficients(k);
    for (int l = 0; l < 6; ++l) {
      const double exact = c.big_c * std::pow(c.small_c, l);
      worst = std::max(worst, std::abs(nu[l] - exact) / exact);
    }
  }
  const auto pure = oracle::nystrom_spectrum(oracle::NystromProblem::with_auto_width(Coupling(0.0), 200));
  double worst_pure = std::abs(pure[0] - 1.0);
  for (std::size_t i = 1; i < pure.size(); ++i) worst_pure = std::max(worst_pure, std::abs(pure[i]));
  report(5, worst < 1e-8 && worst_pure < 1e-10, "Nystrom top-6 eigenvalues",
         fmt("max rel err %.2e at K=0.1,0.5,1; K=0 deviation from {1,0,...} %.2e", worst, worst_pure));
}

void purity_three_ways() {
  double worst = 0.0;
  for (double kv : standard_k_grid()) {
    const Coupling k(kv);
    const double closed = purity(k);
    double spectral = 0.0;
    for (const auto& e : reduced_spectrum(k, 1e-15).entries) spectral += e.degeneracy * e.mu * e.mu;
    const double numeric = oracle::numeric_purity(k, 128);
    worst = std::max({worst, std::abs(closed - spectral), std::abs(closed - numeric)});
  }
  const double at1 = purity(Coupling(1.0));
  // The quoted K=1 value carries six digits; it is compared at the 1e-5
  // spot-value tolerance used elsewhere.
  const bool ok = worst < 1e-8 && std::abs(at1 - 0.894263) <= 1e-5;
  report(6, ok, "purity closed/spectral/quadrature",
         fmt("max disagreement %.2e; purity(1)=%.9f (quoted 0.894263, diff %.1e)", worst, at1, at1 - 0.894263));
}

void overlap_two_ways() {
  double worst = 0.0;
  for (double kv : standard_k_grid()) {
    const Coupling k(kv);
    worst = std::max(worst, std::abs(overlap_squared(k) - oracle::numeric_overlap(k, 128)));
  }
  const double at1 = overlap_squared(Coupling(1.0));
  const double at0 = overlap_squared(Coupling(0.0));
  const bool ok = worst < 1e-8 && std::abs(at1 - 0.94157) <= 5e-6 && std::abs(at0 - 1.0) <= 1e-12;
  report(7, ok, "overlap closed form vs quadrature",
         fmt("max |diff| %.2e; overlap(1)=%.9f; |overlap(0)-1|=%.1e", worst, at1, std::abs(at0 - 1.0)));
}

void partial_trace_oracle() {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> coord(-1.5, 1.5);
  double worst = 0.0;
  for (double kv : {0.3, 1.0}) {
    const Coupling k(kv);
    for (int pair = 0; pair < 5; ++pair) {
      std::array<double, 3> r{}, r2{};
      for (auto& x : r) x = coord(rng);
      for (auto& x : r2) x = coord(rng);
      const double exact = reduced_kernel_3d(r, r2, k);
      worst = std::max(worst, std::abs(oracle::partial_trace_check(k, r, r2, 64) - exact) / exact);
    }
  }
  report(8, worst < 1e-8, "partial trace vs reduced kernel",
         fmt("max rel err %.2e over 5 random pairs at K=0.3, 1.0", worst));
}

void bridge_round_trips() {
  double worst_s = 0.0;
  for (double kv : grid(0.0, 1.0, 101)) {
    const Coupling k(kv);
    worst_s = std::max(worst_s, std::abs(entropy_from_ecorr(correlation_energy(k)) - entropy(k)));
  }
  double worst_e = 0.0;
  for (int i = 1; i <= 500; ++i) {
    const double e = 0.01 * i;
    worst_e = std::max(worst_e, std::abs(ecorr_from_concurrence(concurrence_from_ecorr(e)) - e));
  }
  report(9, worst_s <= 1e-9 && worst_e <= 1e-9, "bridge round-trips",
         fmt("entropy %.2e on K grid; ecorr(concurrence(e)) %.2e on e=0.01..5", worst_s, worst_e));
}

// Each series is checked at two scales: a remainder scaled by its claimed
// order must stay put (or shrink, for little-o claims).
void series_validity() {
  std::string detail;
  bool ok = true;
  const auto note = [&](const char* name, bool pass, double a, double b) {
    detail += std::string(name) + fmt(" %.3g/%.3g", a, b) + (pass ? " ok; " : " BAD; ");
    ok = ok && pass;
  };
  const auto stable = [](double a, double b) { return a > 0.0 && b > 0.0 && b / a > 0.5 && b / a < 2.0; };

  {
    const auto r = [](double k) {
      const Coupling c(k);
      return std::abs(correlation_energy(c) - correlation_energy_series(c)) / std::pow(k, 4);
    };
    note("E_corr/K^4", stable(r(1e-2), r(1e-3)), r(1e-2), r(1e-3));
  }
  {
    const auto r = [](double k) {
      const Coupling c(k);
      return std::abs(entropy(c) - entropy_series_small_k(c)) / (std::pow(k, 4) * std::abs(std::log(k)));
    };
    note("S/(K^4 lnK)", r(1e-3) < 0.5 * r(1e-2), r(1e-2), r(1e-3));
  }
  {
    const auto m = [](double e) { return std::abs(entropy_from_ecorr_small(e) / entropy_from_ecorr(e) - 1.0); };
    const auto i = [](double e) {
      return std::abs(ising::entropy_small_ecorr(e) / ising::entropy_from_ecorr(e) - 1.0);
    };
    note("S_small rel", m(1e-4) < 1e-2 && m(1e-5) < m(1e-4), m(1e-4), m(1e-5));
    note("Ising S_small rel", i(1e-4) < 1e-2 && i(1e-5) < i(1e-4), i(1e-4), i(1e-5));
  }
  {
    const auto r = [](double e) { return std::abs(entropy_from_ecorr(e) - entropy_from_ecorr_large(e)) * e; };
    note("S_large*e", stable(r(1e3), r(1e5)), r(1e3), r(1e5));
  }
  {
    const auto r = [](double e) {
      return std::abs(ising::entropy_from_ecorr(e) - ising::entropy_large_ecorr(e)) * e * e * e;
    };
    note("Ising S_large*e^3", stable(r(30.0), r(100.0)), r(30.0), r(100.0));
  }
  {
    const auto r = [](double c) {
      return std::abs(ecorr_from_concurrence(c) - ecorr_from_concurrence_series(c)) / std::pow(c, 2.5);
    };
    note("E(C)/C^2.5", stable(r(1e-3), r(1e-4)), r(1e-3), r(1e-4));
  }
  report(10, ok, "series and asymptotic orders", detail);
}

void ising_spot_values() {
  const double s2 = ising::entropy(ising::IsingCoupling(2.0));
  const double e15 = ising::correlation_energy(ising::IsingCoupling(1.5));
  const double c15 = ising::concurrence(ising::IsingCoupling(1.5));
  const bool ok_s = std::abs(s2 - 0.60085) <= 1e-5;
  const bool ok_e = std::abs(e15 - 0.5) <= 1e-15;
  const bool ok_c = std::abs(c15 - 0.6) <= 1e-15;
  report(11, ok_s && ok_e && ok_c, "Ising spot values",
         fmt("S(2)=%.9f (target 0.60085 +- 1e-5, diff %.2e)", s2, s2 - 0.60085) +
             fmt("; E_corr(1.5)-0.5=%.1e; C(1.5)-0.6=%.1e", e15 - 0.5, c15 - 0.6));
}

void monotonicity() {
  const auto ks = grid(0.0, 1.0, 101);
  int bad = 0;
  for (std::size_t i = 1; i < ks.size(); ++i) {
    const Coupling a(ks[i - 1]), b(ks[i]);
    bad += !(entropy(b) > entropy(a));
    bad += !(correlation_energy(b) > correlation_energy(a));
    bad += !(moshinsky_concurrence(b) > moshinsky_concurrence(a));
    bad += !(overlap_squared(b) < overlap_squared(a));
  }
  report(12, bad == 0, "monotonicity on 101-point K grid", fmt("%.0f violations", bad));
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  alpha_reproduction();
  first_excited_probability();
  hf_quality();
  entropy_spectral_agreement();
  nystrom_eigenvalues();
  purity_three_ways();
  overlap_two_ways();
  partial_trace_oracle();
  bridge_round_trips();
  series_validity();
  ising_spot_values();
  monotonicity();
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d of 12 criteria failed (%.1f s)\n", failures, seconds);
  return failures == 0 ? 0 : 1;
}
