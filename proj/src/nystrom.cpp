#include "moshinsky/oracle/nystrom.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "moshinsky/core.hpp"

namespace moshinsky::oracle {

double auto_half_width(Coupling k) {
  const auto kernel = reduced_kernel_parameters(k.k());
  return 8.0 / std::sqrt(2.0 * kernel.diag - kernel.cross);
}

NystromProblem::NystromProblem(Coupling coupling, int nodes, double width)
    : k(coupling), n_nodes(nodes), half_width(width) {
  if (nodes < 16) throw std::invalid_argument("NystromProblem: need at least 16 nodes");
  if (!(width > 0.0)) throw std::invalid_argument("NystromProblem: half width must be > 0");
}

NystromProblem NystromProblem::with_auto_width(Coupling coupling, int nodes) {
  return NystromProblem(coupling, nodes, auto_half_width(coupling));
}

template <typename Real>
DenseMatrix<Real> nystrom_matrix(const NystromProblem& problem, QuadratureGrid<Real>* grid_out) {
  using std::sqrt;
  const Real width = problem.half_width;
  auto grid = gauss_legendre<Real>(problem.n_nodes, -width, width);
  const auto kernel = reduced_kernel_parameters<Real>(Real(problem.k.k()));
  const std::size_t n = grid.size();
  std::vector<Real> root_w(n);
  for (std::size_t i = 0; i < n; ++i) root_w[i] = sqrt(grid.weights[i]);

  DenseMatrix<Real> b(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const Real value = root_w[i] * root_w[j] * kernel(grid.nodes[i], grid.nodes[j]);
      b(i, j) = value;
      b(j, i) = value;
    }
  }
  if (grid_out != nullptr) *grid_out = std::move(grid);
  return b;
}

template <typename Real>
EigenDecomposition<Real> nystrom_eigen(const NystromProblem& problem, bool want_vectors) {
  using std::sqrt;
  const auto b = nystrom_matrix<Real>(problem);
  const std::size_t n = b.size();
  const std::size_t half = n / 2;
  const bool has_centre = n % 2 == 1;
  const Real inv_sqrt2 = 1 / sqrt(Real(2));

  // Node i mirrors node n-1-i; (e_i +- e_{n-1-i}) / sqrt(2) span the even
  // and odd subspaces, with the centre node (odd n) purely even.
  DenseMatrix<Real> even(half + (has_centre ? 1 : 0));
  DenseMatrix<Real> odd(half);
  for (std::size_t i = 0; i < half; ++i) {
    for (std::size_t j = 0; j < half; ++j) {
      even(i, j) = b(i, j) + b(i, n - 1 - j);
      odd(i, j) = b(i, j) - b(i, n - 1 - j);
    }
  }
  if (has_centre) {
    const Real root2 = sqrt(Real(2));
    for (std::size_t i = 0; i < half; ++i) {
      even(i, half) = root2 * b(i, half);
      even(half, i) = even(i, half);
    }
    even(half, half) = b(half, half);
  }

  const auto even_eig = symmetric_eigen(std::move(even), want_vectors);
  const auto odd_eig = symmetric_eigen(std::move(odd), want_vectors);

  struct Tagged {
    Real value;
    bool is_even;
    std::size_t column;
  };
  std::vector<Tagged> merged;
  merged.reserve(n);
  for (std::size_t c = 0; c < even_eig.values.size(); ++c) merged.push_back({even_eig.values[c], true, c});
  for (std::size_t c = 0; c < odd_eig.values.size(); ++c) merged.push_back({odd_eig.values[c], false, c});
  std::stable_sort(merged.begin(), merged.end(),
                   [](const Tagged& x, const Tagged& y) { return x.value > y.value; });

  EigenDecomposition<Real> result;
  result.sweeps = std::max(even_eig.sweeps, odd_eig.sweeps);
  result.values.reserve(n);
  for (const auto& t : merged) result.values.push_back(t.value);
  if (want_vectors) {
    result.vectors = DenseMatrix<Real>(n);
    for (std::size_t col = 0; col < n; ++col) {
      const auto& t = merged[col];
      const auto& block = t.is_even ? even_eig.vectors : odd_eig.vectors;
      const Real sign = t.is_even ? Real(1) : Real(-1);
      for (std::size_t i = 0; i < half; ++i) {
        result.vectors(i, col) = block(i, t.column) * inv_sqrt2;
        result.vectors(n - 1 - i, col) = sign * block(i, t.column) * inv_sqrt2;
      }
      if (has_centre) result.vectors(half, col) = t.is_even ? block(half, t.column) : Real(0);
    }
  }
  return result;
}

std::vector<double> nystrom_spectrum(const NystromProblem& problem) {
  const auto eig = nystrom_eigen<Quad>(problem, false);
  std::vector<double> values;
  values.reserve(eig.values.size());
  for (const auto& v : eig.values) values.push_back(static_cast<double>(v));
  return values;
}

double kernel_trace_quadrature(const NystromProblem& problem) {
  const auto grid = gauss_legendre(problem.n_nodes, -problem.half_width, problem.half_width);
  const auto kernel = reduced_kernel_parameters(problem.k.k());
  return grid.integrate([&](double x) { return kernel(x, x); });
}

template DenseMatrix<double> nystrom_matrix<double>(const NystromProblem&, QuadratureGrid<double>*);
template DenseMatrix<Quad> nystrom_matrix<Quad>(const NystromProblem&, QuadratureGrid<Quad>*);
template EigenDecomposition<double> nystrom_eigen<double>(const NystromProblem&, bool);
template EigenDecomposition<Quad> nystrom_eigen<Quad>(const NystromProblem&, bool);

}  // namespace moshinsky::oracle
