#include "moshinsky/figures.hpp"

#include <cmath>
#include <stdexcept>

#include "moshinsky/bridge.hpp"
#include "moshinsky/core.hpp"
#include "moshinsky/ising.hpp"
#include "moshinsky/oracle/traces.hpp"

namespace moshinsky {

namespace {

double need(const std::optional<double>& value, const char* flag) {
  if (!value) throw std::invalid_argument(std::string("missing required option ") + flag);
  return *value;
}

Coupling coupling(const EvalArgs& a) { return Coupling(need(a.k, "--K")); }
double ecorr(const EvalArgs& a) { return need(a.e, "--E"); }
ising::IsingCoupling lambda(const EvalArgs& a) { return ising::IsingCoupling(need(a.lambda, "--lambda")); }
double radius(const EvalArgs& a) {
  const double r = a.r.value_or(0.0);
  if (!(r >= 0.0)) throw std::invalid_argument("--r must be >= 0");
  return r;
}

std::vector<QuantityInfo> build_registry() {
  using P = Parameter;
  std::vector<QuantityInfo> q;
  q.push_back({"exact-energy", P::K, "E_{n,m}(K); --n, --m select the level",
               [](const EvalArgs& a) { return exact_energy({a.n, a.m}, coupling(a)); }});
  q.push_back({"hf-energy", P::K, "Hartree-Fock ground energy",
               [](const EvalArgs& a) { return hf_energy(coupling(a)); }});
  q.push_back({"ecorr", P::K, "correlation energy E_HF - E_00",
               [](const EvalArgs& a) { return correlation_energy(coupling(a)); }});
  q.push_back({"ecorr-series", P::K, "3K^2/8 - 9K^3/16",
               [](const EvalArgs& a) { return correlation_energy_series(coupling(a)); }});
  q.push_back({"overlap", P::K, "|<HF|exact>|^2",
               [](const EvalArgs& a) { return overlap_squared(coupling(a)); }});
  q.push_back({"density-exact", P::K, "exact one-particle density at --r",
               [](const EvalArgs& a) { return density_exact(radius(a), coupling(a)); }});
  q.push_back({"density-hf", P::K, "HF one-particle density at --r",
               [](const EvalArgs& a) { return density_hf(radius(a), coupling(a)); }});
  q.push_back({"spectral-C", P::K, "C in nu_l = C c^l",
               [](const EvalArgs& a) { return spectral_coefficients(coupling(a)).big_c; }});
  q.push_back({"spectral-c", P::K, "c in nu_l = C c^l",
               [](const EvalArgs& a) { return spectral_coefficients(coupling(a)).small_c; }});
  q.push_back({"spectral-delta", P::K, "Gaussian exponent of the 1D eigenfunctions",
               [](const EvalArgs& a) { return spectral_coefficients(coupling(a)).delta; }});
  q.push_back({"mu0", P::K, "largest reduced-density eigenvalue",
               [](const EvalArgs& a) { return std::pow(spectral_coefficients(coupling(a)).big_c, 3); }});
  q.push_back({"mu1", P::K, "first excited reduced-density eigenvalue",
               [](const EvalArgs& a) {
                 const auto c = spectral_coefficients(coupling(a));
                 return std::pow(c.big_c, 3) * c.small_c;
               }});
  q.push_back({"purity", P::K, "Tr[rho_1^2]", [](const EvalArgs& a) { return purity(coupling(a)); }});
  q.push_back({"entropy", P::K, "von Neumann entropy (bits, spin excluded)",
               [](const EvalArgs& a) { return entropy(coupling(a)); }});
  q.push_back({"entropy-spectral", P::K, "entropy summed over the truncated spectrum",
               [](const EvalArgs& a) { return entropy_from_spectrum(reduced_spectrum(coupling(a), 1e-14)); }});
  q.push_back({"entropy-series", P::K, "small-K expansion of the entropy",
               [](const EvalArgs& a) { return entropy_series_small_k(coupling(a)); }});
  q.push_back({"entropy-large-k", P::K, "large-K asymptote of the entropy",
               [](const EvalArgs& a) { return entropy_asymptotic_large_k(coupling(a)); }});
  q.push_back({"concurrence", P::K, "1 - Tr[rho_1^2]",
               [](const EvalArgs& a) { return moshinsky_concurrence(coupling(a)); }});
  q.push_back({"deviation", P::K, "alpha S - E_corr (--alpha, default alpha-min)",
               [](const EvalArgs& a) {
                 const double alpha = a.alpha ? *a.alpha : alpha_min(a.quad_points);
                 return deviation(DeviationWeight(alpha), coupling(a));
               }});
  q.push_back({"numeric-purity", P::K, "Tr[rho_1^2] by double quadrature",
               [](const EvalArgs& a) { return oracle::numeric_purity(coupling(a), 128); }});
  q.push_back({"numeric-overlap", P::K, "overlap by quadrature",
               [](const EvalArgs& a) { return oracle::numeric_overlap(coupling(a), 128); }});
  q.push_back({"tau", P::E, "E + sqrt(2E(E+3))",
               [](const EvalArgs& a) { return Tau::from_ecorr(ecorr(a)).value(); }});
  q.push_back({"k-from-ecorr", P::E, "coupling with the given correlation energy",
               [](const EvalArgs& a) { return k_from_ecorr(ecorr(a)).k(); }});
  q.push_back({"entropy-ecorr", P::E, "entropy as a function of E_corr",
               [](const EvalArgs& a) { return entropy_from_ecorr(ecorr(a)); }});
  q.push_back({"entropy-ecorr-small", P::E, "small-E_corr form of entropy-ecorr",
               [](const EvalArgs& a) { return entropy_from_ecorr_small(ecorr(a)); }});
  q.push_back({"entropy-ecorr-large", P::E, "large-E_corr form of entropy-ecorr",
               [](const EvalArgs& a) { return entropy_from_ecorr_large(ecorr(a)); }});
  q.push_back({"concurrence-ecorr", P::E, "concurrence as a function of E_corr",
               [](const EvalArgs& a) { return concurrence_from_ecorr(ecorr(a)); }});
  q.push_back({"ising-concurrence-ecorr", P::E, "two-site Ising concurrence vs E_corr",
               [](const EvalArgs& a) { return ising::concurrence_from_ecorr(ecorr(a)); }});
  q.push_back({"ising-entropy-ecorr", P::E, "two-site Ising entropy vs E_corr",
               [](const EvalArgs& a) { return ising::entropy_from_ecorr(ecorr(a)); }});
  q.push_back({"ising-entropy-small", P::E, "small-E_corr form of ising-entropy-ecorr",
               [](const EvalArgs& a) { return ising::entropy_small_ecorr(ecorr(a)); }});
  q.push_back({"ising-entropy-large", P::E, "large-E_corr form of ising-entropy-ecorr",
               [](const EvalArgs& a) { return ising::entropy_large_ecorr(ecorr(a)); }});
  q.push_back({"ising-entropy", P::Lambda, "two-site Ising entropy",
               [](const EvalArgs& a) { return ising::entropy(lambda(a)); }});
  q.push_back({"ising-ecorr", P::Lambda, "two-site Ising correlation energy",
               [](const EvalArgs& a) { return ising::correlation_energy(lambda(a)); }});
  q.push_back({"ising-concurrence", P::Lambda, "two-site Ising concurrence",
               [](const EvalArgs& a) { return ising::concurrence(lambda(a)); }});
  q.push_back({"ecorr-concurrence", P::Concurrence, "E_corr as a function of the concurrence",
               [](const EvalArgs& a) { return ecorr_from_concurrence(need(a.concurrence, "--C")); }});
  q.push_back({"ecorr-concurrence-series", P::Concurrence, "small-C expansion of ecorr-concurrence",
               [](const EvalArgs& a) {
                 const double c = need(a.concurrence, "--C");
                 if (!(c >= 0.0)) throw std::invalid_argument("--C must be >= 0");
                 return ecorr_from_concurrence_series(c);
               }});
  q.push_back({"alpha-min", P::None, "least-squares scale between entropy and E_corr",
               [](const EvalArgs& a) { return alpha_min(a.quad_points); }});
  return q;
}

std::optional<double>& slot(EvalArgs& args, Parameter p) {
  switch (p) {
    case Parameter::K: return args.k;
    case Parameter::E: return args.e;
    case Parameter::Lambda: return args.lambda;
    case Parameter::Concurrence: return args.concurrence;
    case Parameter::None: break;
  }
  throw std::invalid_argument("quantity has no sweep parameter");
}

}  // namespace

const std::vector<QuantityInfo>& quantity_registry() {
  static const std::vector<QuantityInfo> registry = build_registry();
  return registry;
}

const QuantityInfo* find_quantity(const std::string& name) {
  for (const auto& q : quantity_registry()) {
    if (q.name == name) return &q;
  }
  return nullptr;
}

const char* parameter_flag(Parameter p) {
  switch (p) {
    case Parameter::K: return "K";
    case Parameter::E: return "E";
    case Parameter::Lambda: return "lambda";
    case Parameter::Concurrence: return "C";
    case Parameter::None: return "";
  }
  return "";
}

std::vector<double> uniform_grid(const SweepRange& range) {
  if (!(range.min < range.max)) throw std::invalid_argument("sweep range needs min < max");
  if (range.points < 2) throw std::invalid_argument("sweep needs at least 2 points");
  std::vector<double> grid(static_cast<std::size_t>(range.points));
  const double step = (range.max - range.min) / (range.points - 1);
  for (int i = 0; i < range.points; ++i) grid[i] = range.min + step * i;
  grid.back() = range.max;
  return grid;
}

bool is_figure(const std::string& name) {
  static const char* const kNames[] = {"fig1", "fig2", "fig3", "fig4", "fig5",
                                       "fig6", "fig7", "fig8", "fig9", "fig10"};
  for (const char* f : kNames) {
    if (name == f) return true;
  }
  return false;
}

SweepTable figure_table(const std::string& figure, std::optional<double> range_min,
                        std::optional<double> range_max, std::optional<int> points, int quad_points) {
  if (!is_figure(figure)) throw std::invalid_argument("unknown figure " + figure);

  SweepRange range;
  if (figure == "fig3") range = {0.0, 3.0, 121};
  if (figure == "fig8") range = {0.01, 1.0, 100};
  range.min = range_min.value_or(range.min);
  range.max = range_max.value_or(range.max);
  range.points = points.value_or(range.points);
  const auto grid = uniform_grid(range);

  if (figure == "fig3") {
    const Coupling k(1.0);
    SweepTable t({"r", "density_exact", "density_hf"});
    for (double r : grid) {
      if (r < 0.0) throw std::invalid_argument("fig3: r must be >= 0");
      t.add_row({r, density_exact(r, k), density_hf(r, k)});
    }
    return t;
  }
  if (figure == "fig8") return relative_deviation_tables(grid, quad_points);
  if (figure == "fig10") return overlap_vs_entropy_curve(grid);
  if (figure == "fig9") {
    SweepTable t({"ecorr", "entropy_moshinsky", "entropy_ising", "concurrence_moshinsky",
                  "concurrence_ising"});
    for (double e : grid) {
      t.add_row({e, entropy_from_ecorr(e), ising::entropy_from_ecorr(e), concurrence_from_ecorr(e),
                 ising::concurrence_from_ecorr(e)});
    }
    return t;
  }

  std::vector<std::string> header{"K"};
  if (figure == "fig1") header.insert(header.end(), {"exact_energy", "hf_energy", "ecorr"});
  if (figure == "fig2") header.push_back("overlap");
  if (figure == "fig4") header.insert(header.end(), {"mu0", "mu1"});
  if (figure == "fig5") header.push_back("purity");
  if (figure == "fig6") header.push_back("entropy");
  std::optional<DeviationWeight> alpha;
  if (figure == "fig7") {
    header.push_back("deviation");
    alpha.emplace(alpha_min(quad_points));
  }

  SweepTable t(header);
  for (double kv : grid) {
    const Coupling k(kv);
    std::vector<double> row{kv};
    if (figure == "fig1") {
      row.insert(row.end(), {exact_energy({}, k), hf_energy(k), correlation_energy(k)});
    } else if (figure == "fig2") {
      row.push_back(overlap_squared(k));
    } else if (figure == "fig4") {
      const auto c = spectral_coefficients(k);
      const double mu0 = c.big_c * c.big_c * c.big_c;
      row.insert(row.end(), {mu0, mu0 * c.small_c});
    } else if (figure == "fig5") {
      row.push_back(purity(k));
    } else if (figure == "fig6") {
      row.push_back(entropy(k));
    } else if (figure == "fig7") {
      row.push_back(deviation(*alpha, k));
    }
    t.add_row(std::move(row));
  }
  return t;
}

SweepTable quantity_sweep(const QuantityInfo& quantity, const SweepRange& range, const EvalArgs& fixed) {
  if (quantity.parameter == Parameter::None) {
    throw std::invalid_argument(quantity.name + " takes no parameter and cannot be swept");
  }
  SweepTable t({parameter_flag(quantity.parameter), quantity.name});
  EvalArgs args = fixed;
  for (double x : uniform_grid(range)) {
    slot(args, quantity.parameter) = x;
    t.add_row({x, quantity.evaluate(args)});
  }
  return t;
}

}  // namespace moshinsky
