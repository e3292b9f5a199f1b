#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace moshinsky::oracle {

/// Dense square matrix, row-major.
template <typename Real>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t n) : n_(n), data_(n * n, Real(0)) {}

  std::size_t size() const { return n_; }
  Real& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const Real& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Real> data_;
};

template <typename Real>
struct EigenDecomposition {
  std::vector<Real> values;     // descending
  DenseMatrix<Real> vectors;    // column j belongs to values[j]; empty if not requested
  int sweeps = 0;
};

class EigenNonConvergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <typename Real>
Real off_diagonal_norm(const DenseMatrix<Real>& m) {
  using std::sqrt;
  Real sum = 0;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (i != j) sum += m(i, j) * m(i, j);
  return sqrt(sum);
}

/// Cyclic Jacobi rotations for a dense symmetric matrix. Throws
/// std::invalid_argument for asymmetric input and EigenNonConvergence when
/// max_sweeps is exhausted.
template <typename Real>
EigenDecomposition<Real> symmetric_eigen(DenseMatrix<Real> a, bool want_vectors = true,
                                         double symmetry_tol = 1e-12, int max_sweeps = 100) {
  using std::abs;
  using std::sqrt;
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Real scale = std::max<Real>(Real(1), std::max(abs(a(i, j)), abs(a(j, i))));
      if (abs(a(i, j) - a(j, i)) > Real(symmetry_tol) * scale) {
        throw std::invalid_argument("symmetric_eigen: matrix is not symmetric");
      }
      a(j, i) = a(i, j);
    }
  }

  EigenDecomposition<Real> result;
  DenseMatrix<Real> v = want_vectors ? DenseMatrix<Real>::identity(n) : DenseMatrix<Real>();
  std::vector<Real> d(n), b(n), z(n, Real(0));
  for (std::size_t i = 0; i < n; ++i) b[i] = d[i] = a(i, i);

  // Converged once the off-diagonal Frobenius norm is below one ulp of the
  // whole matrix; elements under that level are dropped without rotating.
  Real frobenius = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) frobenius += a(i, j) * a(i, j);
  frobenius = sqrt(frobenius);
  const Real eps = std::numeric_limits<Real>::epsilon();
  const Real target = eps * frobenius;
  const Real negligible = target / Real(n);

  bool converged = n < 2 || frobenius == Real(0);
  int sweep = 0;
  while (!converged && sweep < max_sweeps) {
    Real off2 = 0;
    Real off1 = 0;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        off2 += 2 * a(p, q) * a(p, q);
        off1 += abs(a(p, q));
      }
    }
    if (sqrt(off2) <= target) {
      converged = true;
      break;
    }
    ++sweep;
    const Real threshold = sweep < 4 ? Real(0.2) * off1 / Real(n * n) : Real(0);

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Real g = 100 * abs(a(p, q));
        if (abs(a(p, q)) < negligible ||
            (sweep > 4 && abs(d[p]) + g == abs(d[p]) && abs(d[q]) + g == abs(d[q]))) {
          a(p, q) = 0;
          continue;
        }
        if (abs(a(p, q)) <= threshold) continue;

        Real h = d[q] - d[p];
        Real t;
        if (abs(h) + g == abs(h)) {
          t = a(p, q) / h;
        } else {
          const Real theta = Real(0.5) * h / a(p, q);
          t = 1 / (abs(theta) + sqrt(1 + theta * theta));
          if (theta < 0) t = -t;
        }
        const Real c = 1 / sqrt(1 + t * t);
        const Real s = t * c;
        const Real tau = s / (1 + c);
        h = t * a(p, q);
        z[p] -= h;
        z[q] += h;
        d[p] -= h;
        d[q] += h;
        a(p, q) = 0;

        const auto rotate = [&](Real& x, Real& y) {
          const Real gx = x;
          const Real hy = y;
          x = gx - s * (hy + gx * tau);
          y = hy + s * (gx - hy * tau);
        };
        for (std::size_t j = 0; j < p; ++j) rotate(a(j, p), a(j, q));
        for (std::size_t j = p + 1; j < q; ++j) rotate(a(p, j), a(j, q));
        for (std::size_t j = q + 1; j < n; ++j) rotate(a(p, j), a(q, j));
        if (want_vectors) {
          for (std::size_t j = 0; j < n; ++j) rotate(v(j, p), v(j, q));
        }
      }
    }
    for (std::size_t p = 0; p < n; ++p) {
      b[p] += z[p];
      d[p] = b[p];
      z[p] = 0;
    }
  }
  if (!converged) {
    throw EigenNonConvergence("symmetric_eigen: no convergence within the sweep limit");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return d[i] > d[j]; });
  result.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) result.values[i] = d[order[i]];
  if (want_vectors) {
    result.vectors = DenseMatrix<Real>(n);
    for (std::size_t col = 0; col < n; ++col)
      for (std::size_t row = 0; row < n; ++row) result.vectors(row, col) = v(row, order[col]);
  }
  result.sweeps = sweep;
  return result;
}

/// Eigenvalues only, descending.
template <typename Real>
std::vector<Real> symmetric_eigenvalues(const DenseMatrix<Real>& m) {
  return symmetric_eigen(m, false).values;
}

}  // namespace moshinsky::oracle
