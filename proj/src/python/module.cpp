#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "moshinsky/bridge.hpp"
#include "moshinsky/core.hpp"
#include "moshinsky/figures.hpp"
#include "moshinsky/ising.hpp"
#include "moshinsky/oracle/nystrom.hpp"
#include "moshinsky/oracle/traces.hpp"
#include "moshinsky/verify.hpp"

namespace py = pybind11;
using namespace moshinsky;

namespace {

// Figures come back as {column name: list of values}, in header order.
py::dict table_to_dict(const SweepTable& table) {
  py::dict result;
  for (const auto& name : table.header()) result[py::str(name)] = table.column(name);
  return result;
}

double eval_quantity(const std::string& name, py::kwargs kwargs) {
  const auto* q = find_quantity(name);
  if (q == nullptr) throw py::value_error("unknown quantity '" + name + "'");
  EvalArgs args;
  for (const auto& item : kwargs) {
    const auto key = item.first.cast<std::string>();
    const auto value = item.second;
    if (key == "K") args.k = value.cast<double>();
    else if (key == "E") args.e = value.cast<double>();
    else if (key == "lam") args.lambda = value.cast<double>();
    else if (key == "C") args.concurrence = value.cast<double>();
    else if (key == "r") args.r = value.cast<double>();
    else if (key == "alpha") args.alpha = value.cast<double>();
    else if (key == "n") args.n = value.cast<unsigned>();
    else if (key == "m") args.m = value.cast<unsigned>();
    else if (key == "quad_points") args.quad_points = value.cast<int>();
    else throw py::type_error("unexpected keyword '" + key + "'");
  }
  return q->evaluate(args);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Moshinsky two-oscillator model: energies, reduced-state entanglement, oracles";

  // Plain floats in, plain floats out; range checks raise ValueError.
  m.def("exact_energy", [](double k, unsigned n, unsigned mm) { return exact_energy({n, mm}, Coupling(k)); },
        py::arg("K"), py::arg("n") = 0, py::arg("m") = 0);
  m.def("hf_energy", [](double k) { return hf_energy(Coupling(k)); }, py::arg("K"));
  m.def("correlation_energy", [](double k) { return correlation_energy(Coupling(k)); }, py::arg("K"));
  m.def("overlap", [](double k) { return overlap_squared(Coupling(k)); }, py::arg("K"));
  m.def("density_exact", [](double r, double k) { return density_exact(r, Coupling(k)); }, py::arg("r"),
        py::arg("K"));
  m.def("density_hf", [](double r, double k) { return density_hf(r, Coupling(k)); }, py::arg("r"), py::arg("K"));
  m.def("spectral_coefficients",
        [](double k) {
          const auto c = spectral_coefficients(Coupling(k));
          return py::make_tuple(c.big_c, c.small_c, c.delta);
        },
        py::arg("K"), "(C, c, delta) with nu_l = C c^l");
  m.def("reduced_spectrum",
        [](double k, double tol) {
          const auto s = reduced_spectrum(Coupling(k), tol);
          std::vector<std::pair<double, std::uint64_t>> out;
          out.reserve(s.entries.size());
          for (const auto& e : s.entries) out.emplace_back(e.mu, e.degeneracy);
          return py::make_tuple(out, s.tail_bound);
        },
        py::arg("K"), py::arg("tol") = 1e-14, "([(mu, degeneracy), ...], tail_bound)");
  m.def("purity", [](double k) { return purity(Coupling(k)); }, py::arg("K"));
  m.def("entropy", [](double k) { return entropy(Coupling(k)); }, py::arg("K"));
  m.def("concurrence", [](double k) { return moshinsky_concurrence(Coupling(k)); }, py::arg("K"));
  m.def("eigenfunction_coefficients", [](unsigned l, double k) { return eigenfunction_coefficients(l, Coupling(k)); },
        py::arg("l"), py::arg("K"));

  m.def("k_from_ecorr", [](double e) { return k_from_ecorr(e).k(); }, py::arg("E"));
  m.def("entropy_from_ecorr", &entropy_from_ecorr, py::arg("E"));
  m.def("concurrence_from_ecorr", &concurrence_from_ecorr, py::arg("E"));
  m.def("ecorr_from_concurrence", &ecorr_from_concurrence, py::arg("C"));
  m.def("alpha_min", &alpha_min, py::arg("quad_points") = kDefaultQuadPoints);
  m.def("deviation", [](double alpha, double k) { return deviation(DeviationWeight(alpha), Coupling(k)); },
        py::arg("alpha"), py::arg("K"));

  auto is = m.def_submodule("ising", "two-site Ising comparison model");
  is.def("entropy", [](double lam) { return ising::entropy(ising::IsingCoupling(lam)); }, py::arg("lam"));
  is.def("correlation_energy", [](double lam) { return ising::correlation_energy(ising::IsingCoupling(lam)); },
         py::arg("lam"));
  is.def("concurrence", [](double lam) { return ising::concurrence(ising::IsingCoupling(lam)); }, py::arg("lam"));
  is.def("entropy_from_ecorr", &ising::entropy_from_ecorr, py::arg("E"));
  is.def("concurrence_from_ecorr", &ising::concurrence_from_ecorr, py::arg("E"));

  auto orc = m.def_submodule("oracle", "quadrature and Nystrom cross-checks");
  orc.def("nystrom_spectrum",
          [](double k, int n) { return oracle::nystrom_spectrum(oracle::NystromProblem::with_auto_width(Coupling(k), n)); },
          py::arg("K"), py::arg("n_nodes") = 200, py::call_guard<py::gil_scoped_release>());
  orc.def("numeric_purity", [](double k, int n) { return oracle::numeric_purity(Coupling(k), n); }, py::arg("K"),
          py::arg("n") = 128);
  orc.def("numeric_overlap", [](double k, int n) { return oracle::numeric_overlap(Coupling(k), n); }, py::arg("K"),
          py::arg("n") = 128);

  m.def("quantities", [] {
    std::vector<std::string> names;
    for (const auto& q : quantity_registry()) names.push_back(q.name);
    return names;
  });
  m.def("eval", &eval_quantity, py::arg("quantity"),
        "Evaluate a named quantity; keywords K, E, lam, C, r, alpha, n, m, quad_points");
  m.def("figure",
        [](const std::string& fig, std::optional<double> lo, std::optional<double> hi, std::optional<int> points) {
          if (!is_figure(fig)) throw py::value_error("unknown figure '" + fig + "'");
          return table_to_dict(figure_table(fig, lo, hi, points));
        },
        py::arg("figure"), py::arg("min") = py::none(), py::arg("max") = py::none(), py::arg("points") = py::none());
  m.def("figure_csv",
        [](const std::string& fig, std::optional<double> lo, std::optional<double> hi, std::optional<int> points) {
          if (!is_figure(fig)) throw py::value_error("unknown figure '" + fig + "'");
          return figure_table(fig, lo, hi, points).to_csv();
        },
        py::arg("figure"), py::arg("min") = py::none(), py::arg("max") = py::none(), py::arg("points") = py::none());
  m.def("verify",
        [](const std::string& suite, std::optional<double> tol) {
          if (!is_verify_suite(suite)) throw std::invalid_argument("unknown suite '" + suite + "'");
          std::vector<std::tuple<std::string, double, double, bool>> rows;
          for (const auto& r : run_verify(suite, tol)) rows.emplace_back(r.name, r.max_error, r.tolerance, r.passed());
          return rows;
        },
        py::arg("suite") = "all", py::arg("tol") = py::none(), py::call_guard<py::gil_scoped_release>());
}
