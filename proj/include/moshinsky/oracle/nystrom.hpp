#pragma once

// Nystrom discretisation of the one-dimensional reduced-density eigenproblem
//   int rho(x, x') w(x') dx' = nu w(x)
// on a truncated interval [-L, L] with Gauss-Legendre nodes.

#include <boost/multiprecision/float128.hpp>
#include <vector>

#include "moshinsky/coupling.hpp"
#include "moshinsky/oracle/jacobi.hpp"
#include "moshinsky/oracle/quadrature.hpp"

namespace moshinsky::oracle {

/// binary128; the higher eigenvalues at K <= 1 lie far below double
/// resolution relative to the leading one.
using Quad = boost::multiprecision::float128;

/// 8 / sqrt(p) with p the decay rate of the kernel diagonal rho(x, x).
double auto_half_width(Coupling k);

struct NystromProblem {
  Coupling k;
  int n_nodes = 200;
  double half_width = 0.0;

  NystromProblem(Coupling coupling, int nodes, double width);
  static NystromProblem with_auto_width(Coupling coupling, int nodes = 200);
};

/// B_ij = sqrt(w_i w_j) rho(x_i, x_j), symmetric by construction.
template <typename Real>
DenseMatrix<Real> nystrom_matrix(const NystromProblem& problem, QuadratureGrid<Real>* grid = nullptr);

/// Full eigen-decomposition of B, descending. The reflection symmetry of the
/// kernel is used to split B into even and odd blocks before diagonalising;
/// the returned vectors live in the full n-dimensional space.
template <typename Real>
EigenDecomposition<Real> nystrom_eigen(const NystromProblem& problem, bool want_vectors = false);

/// Eigenvalues of B (computed in binary128), descending.
std::vector<double> nystrom_spectrum(const NystromProblem& problem);

/// sum_i w_i rho(x_i, x_i), the quadrature of the kernel trace.
double kernel_trace_quadrature(const NystromProblem& problem);

}  // namespace moshinsky::oracle
