#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "interscal/errors.hpp"
#include "interscal/interval.hpp"
#include "interscal/linalg.hpp"

namespace interscal {

/// All 2^n corners of every object's box, stacked as numeric rows. Object i
/// owns rows [i * 2^n, (i+1) * 2^n); within a block the corners run in
/// lexicographic order, first coordinate slowest, lo before hi.
class VertexMatrix {
 public:
  VertexMatrix(Matrix rows, std::size_t base_m, std::size_t dim)
      : rows_(std::move(rows)), base_m_(base_m), dim_(dim) {}

  const Matrix& rows() const { return rows_; }
  std::size_t base_m() const { return base_m_; }
  std::size_t dim() const { return dim_; }
  std::size_t corners_per_object() const {
    return std::size_t{1} << dim_;
  }
  std::size_t row_owner(std::size_t row) const {
    return row / corners_per_object();
  }

 private:
  Matrix rows_;
  std::size_t base_m_;
  std::size_t dim_;
};

/// Enumerates the corner matrix of a table: m * 2^n rows of n coordinates.
inline VertexMatrix vertex_matrix(const IntervalTable& table) {
  const std::size_t n = table.dim();
  if (n > 20) {
    throw DimensionTooLarge("vertex enumeration limited to 20 variables, got " +
                            std::to_string(n));
  }
  const std::size_t m = table.objects();
  const std::size_t corners = std::size_t{1} << n;
  Matrix rows(m * corners, n);
  for (std::size_t i = 0; i < m; ++i) {
    const Box& box = table.row(i);
    for (std::size_t c = 0; c < corners; ++c) {
      for (std::size_t k = 0; k < n; ++k) {
        const bool high = (c >> (n - 1 - k)) & 1u;
        rows(i * corners + c, k) = high ? box[k].hi() : box[k].lo();
      }
    }
  }
  return VertexMatrix(std::move(rows), m, n);
}

/// Centers each column to mean 0 and scales it to standard deviation 1,
/// population convention (divisor = row count). A column without spread is
/// an error naming the offending column.
inline VertexMatrix standardize(const VertexMatrix& mat) {
  const Matrix& x = mat.rows();
  const std::size_t rows = x.rows();
  const std::size_t cols = x.cols();
  Matrix out(rows, cols);
  for (std::size_t k = 0; k < cols; ++k) {
    double mean = 0.0;
    for (std::size_t r = 0; r < rows; ++r) mean += x(r, k);
    mean /= static_cast<double>(rows);
    double var = 0.0;
    for (std::size_t r = 0; r < rows; ++r) {
      const double d = x(r, k) - mean;
      var += d * d;
    }
    var /= static_cast<double>(rows);
    const double sd = std::sqrt(var);
    if (sd <= 1e-12 * std::max(1.0, std::abs(mean))) {
      throw ZeroVariance(
          "column " + std::to_string(k + 1) + " has no variance", k);
    }
    for (std::size_t r = 0; r < rows; ++r) {
      out(r, k) = (x(r, k) - mean) / sd;
    }
  }
  return VertexMatrix(std::move(out), mat.base_m(), mat.dim());
}

struct TopsPcaResult {
  std::vector<std::vector<Interval>> components;  // m x q
  std::vector<double> eigenvalues;                // all n, descending
  std::size_t positive_rank = 0;
  bool standardized = false;
  std::size_t covariance_divisor = 0;  // population divisor actually used
  std::vector<std::string> labels;
};

/// Principal component analysis of the (optionally standardized) vertex
/// matrix. Each object's component j is the [min, max] of its 2^n vertex
/// projections onto eigenvector j of the covariance matrix.
inline TopsPcaResult tops_pca(const IntervalTable& table, std::size_t q,
                              bool standardized = false) {
  const std::size_t n = table.dim();
  if (q < 1 || q > n) {
    throw InvalidInput("component count must be in [1, " + std::to_string(n) +
                       "]");
  }
  VertexMatrix vm = vertex_matrix(table);
  if (standardized) vm = standardize(vm);

  const Matrix& x = vm.rows();
  const std::size_t rows = x.rows();
  std::vector<double> mean(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t r = 0; r < rows; ++r) mean[k] += x(r, k);
    mean[k] /= static_cast<double>(rows);
  }
  Matrix centered(rows, n);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t k = 0; k < n; ++k) centered(r, k) = x(r, k) - mean[k];
  }

  SymmetricMatrix cov(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      double acc = 0.0;
      for (std::size_t r = 0; r < rows; ++r) acc += centered(r, a) * centered(r, b);
      cov.set(a, b, acc / static_cast<double>(rows));
    }
  }

  const EigenDecomposition eig = eigen_symmetric(cov);
  const double eps = positive_eigenvalue_threshold(eig.eigenvalues);

  TopsPcaResult res;
  res.eigenvalues = eig.eigenvalues;
  res.standardized = standardized;
  res.covariance_divisor = rows;
  res.labels = table.row_labels();
  for (double lambda : res.eigenvalues) {
    if (lambda > eps && lambda > 0.0) ++res.positive_rank;
  }

  const std::size_t corners = vm.corners_per_object();
  res.components.resize(table.objects());
  for (std::size_t i = 0; i < table.objects(); ++i) {
    res.components[i].reserve(q);
    for (std::size_t j = 0; j < q; ++j) {
      double lo = 0.0;
      double hi = 0.0;
      for (std::size_t c = 0; c < corners; ++c) {
        double score = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          score += centered(i * corners + c, k) * eig.eigenvectors(k, j);
        }
        if (c == 0) {
          lo = hi = score;
        } else {
          lo = std::min(lo, score);
          hi = std::max(hi, score);
        }
      }
      res.components[i].emplace_back(lo, hi);
    }
  }
  return res;
}

}  // namespace interscal
