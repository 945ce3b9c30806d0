#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <vector>

#include "interscal/errors.hpp"

namespace interscal {

/// Dense row-major matrix of doubles.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  double operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  Matrix multiply(const Matrix& other) const {
    if (cols_ != other.rows_) {
      throw ShapeMismatch("matrix product shape mismatch");
    }
    Matrix out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < other.cols_; ++j) {
        double acc = 0.0;
        for (std::size_t k = 0; k < cols_; ++k) {
          acc += (*this)(i, k) * other(k, j);
        }
        out(i, j) = acc;
      }
    }
    return out;
  }

  Matrix transposed() const {
    Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    }
    return out;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> data_;
};

/// Symmetric matrix; the paired setter keeps (i,j) and (j,i) bit-identical.
class SymmetricMatrix {
 public:
  explicit SymmetricMatrix(std::size_t order)
      : order_(order), data_(order * order, 0.0) {}

  static SymmetricMatrix from_rows(
      const std::vector<std::vector<double>>& rows) {
    SymmetricMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rows.size()) {
        throw ShapeMismatch("symmetric matrix rows must be square");
      }
      for (std::size_t j = i; j < rows.size(); ++j) {
        if (rows[i][j] != rows[j][i]) {
          throw ShapeMismatch("matrix is not symmetric");
        }
        m.set(i, j, rows[i][j]);
      }
    }
    return m;
  }

  std::size_t order() const { return order_; }

  double operator()(std::size_t i, std::size_t j) const {
    return data_[i * order_ + j];
  }

  void set(std::size_t i, std::size_t j, double v) {
    data_[i * order_ + j] = v;
    data_[j * order_ + i] = v;
  }

  double max_abs() const {
    double m = 0.0;
    for (double v : data_) m = std::max(m, std::abs(v));
    return m;
  }

  /// Induced infinity norm (maximum absolute row sum).
  double inf_norm() const {
    double best = 0.0;
    for (std::size_t i = 0; i < order_; ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < order_; ++j) s += std::abs((*this)(i, j));
      best = std::max(best, s);
    }
    return best;
  }

 private:
  std::size_t order_;
  std::vector<double> data_;
};

struct EigenDecomposition {
  std::vector<double> eigenvalues;  // non-increasing
  Matrix eigenvectors;              // column r pairs with eigenvalues[r]
};

/// Converts squared dissimilarities to an inner-product matrix by removing
/// row, column, and grand means. Output rows and columns sum to zero.
inline SymmetricMatrix double_center(const SymmetricMatrix& d) {
  const std::size_t n = d.order();
  std::vector<double> row_mean(n, 0.0);
  double grand = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) s += d(i, j) * d(i, j);
    row_mean[i] = s / static_cast<double>(n);
    grand += s;
  }
  grand /= static_cast<double>(n) * static_cast<double>(n);
  SymmetricMatrix b(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const double sq = d(i, j) * d(i, j);
      b.set(i, j, -0.5 * (sq - row_mean[i] - row_mean[j] + grand));
    }
  }
  return b;
}

namespace detail {

// Largest-|entry| component of each column made positive. Entries within a
// relative 1e-12 of the maximum count as tied and the lowest index wins, so
// structurally symmetric eigenvectors get a stable orientation.
inline void fix_column_signs(Matrix& v) {
  const std::size_t n = v.rows();
  for (std::size_t c = 0; c < v.cols(); ++c) {
    double amax = 0.0;
    for (std::size_t i = 0; i < n; ++i) amax = std::max(amax, std::abs(v(i, c)));
    if (amax == 0.0) continue;
    std::size_t pick = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (std::abs(v(i, c)) >= amax * (1.0 - 1e-12)) {
        pick = i;
        break;
      }
    }
    if (v(pick, c) < 0.0) {
      for (std::size_t i = 0; i < n; ++i) v(i, c) = -v(i, c);
    }
  }
}

}  // namespace detail

/// Full eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.
/// Deterministic: identical input bits give identical output bits. Throws
/// NoConvergence if the off-diagonal mass has not vanished after max_sweeps.
inline EigenDecomposition eigen_symmetric(const SymmetricMatrix& input,
                                          int max_sweeps = 100) {
  const std::size_t n = input.order();
  std::vector<std::vector<double>> a(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = input(i, j);
  }
  Matrix v = Matrix::identity(n);

  double frob = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) frob += a[i][j] * a[i][j];
  }
  frob = std::sqrt(frob);
  const double off_tol = 1e-13 * frob;

  auto off_norm = [&]() {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) s += a[i][j] * a[i][j];
    }
    return std::sqrt(2.0 * s);
  };

  bool converged = frob == 0.0 || n < 2;
  for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
    if (off_norm() <= off_tol) {
      converged = true;
      break;
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p][q];
        if (std::abs(apq) <= 1e-300) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * apq);
        double t = 1.0 / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
        if (theta < 0.0) t = -t;
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const double tau = s / (1.0 + c);
        const double h = t * apq;
        a[p][p] -= h;
        a[q][q] += h;
        a[p][q] = 0.0;
        a[q][p] = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = a[k][p];
          const double akq = a[k][q];
          a[k][p] = akp - s * (akq + tau * akp);
          a[p][k] = a[k][p];
          a[k][q] = akq + s * (akp - tau * akq);
          a[q][k] = a[k][q];
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = vkp - s * (vkq + tau * vkp);
          v(k, q) = vkq + s * (vkp - tau * vkq);
        }
      }
    }
  }
  if (!converged && off_norm() > off_tol) {
    throw NoConvergence("jacobi sweeps exhausted (" +
                        std::to_string(max_sweeps) + ")");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return a[x][x] > a[y][y];
  });

  EigenDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors = Matrix(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    out.eigenvalues[r] = a[order[r]][order[r]];
    for (std::size_t i = 0; i < n; ++i) {
      out.eigenvectors(i, r) = v(i, order[r]);
    }
  }
  detail::fix_column_signs(out.eigenvectors);
  return out;
}

/// Relative threshold below which an eigenvalue does not count as positive.
inline double positive_eigenvalue_threshold(const std::vector<double>& ev) {
  const double lmax = ev.empty() ? 0.0 : std::max(ev.front(), 0.0);
  return 1e-10 * lmax;
}

struct ClassicalMdsResult {
  Matrix coords;                    // order x q
  std::vector<double> eigenvalues;  // all of them, descending
  std::size_t positive_rank = 0;
  bool rank_deficient = false;  // fewer positive eigenvalues than requested
};

/// Classical scaling of a numeric dissimilarity matrix: double centering,
/// eigendecomposition, then coordinates sqrt(lambda_r) * v_r for the q
/// largest eigenvalues. Dimensions beyond the positive spectrum come out as
/// zero columns with the rank_deficient flag set.
inline ClassicalMdsResult classical_mds(const SymmetricMatrix& d,
                                        std::size_t q) {
  if (q < 1) throw InvalidInput("dimension count must be at least 1");
  const SymmetricMatrix b = double_center(d);
  EigenDecomposition eig = eigen_symmetric(b);
  const double eps = positive_eigenvalue_threshold(eig.eigenvalues);
  ClassicalMdsResult res;
  res.eigenvalues = std::move(eig.eigenvalues);
  for (double lambda : res.eigenvalues) {
    if (lambda > eps && lambda > 0.0) ++res.positive_rank;
  }
  res.rank_deficient = res.positive_rank < q;
  const std::size_t n = d.order();
  res.coords = Matrix(n, q);
  const std::size_t used = std::min(q, res.positive_rank);
  for (std::size_t r = 0; r < used; ++r) {
    const double scale = std::sqrt(res.eigenvalues[r]);
    for (std::size_t i = 0; i < n; ++i) {
      res.coords(i, r) = scale * eig.eigenvectors(i, r);
    }
  }
  return res;
}

}  // namespace interscal
