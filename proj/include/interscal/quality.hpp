#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "interscal/box_geometry.hpp"
#include "interscal/embedding.hpp"
#include "interscal/errors.hpp"
#include "interscal/interval.hpp"
#include "interscal/linalg.hpp"

namespace interscal {

struct PairStress {
  std::size_t i;
  std::size_t j;
  double d_lo;      // embedded minimum box distance
  double d_hi;      // embedded maximum box distance
  double delta_lo;  // observed bounds
  double delta_hi;
};

struct StressReport {
  double raw_stress = 0.0;
  // raw divided by the sum of squared observed bounds over i < j.
  double normalized_stress = 0.0;
  std::vector<PairStress> per_pair;
};

/// Stress of an embedding against the observed dissimilarities: sum over
/// pairs of squared deviations between embedded-rectangle min/max distances
/// and the observed interval bounds. Evaluation only; no optimization.
inline StressReport embedding_stress(const IntervalDissimMatrix& delta,
                                     const IntervalEmbedding& e) {
  const std::size_t m = delta.size();
  if (e.objects() != m) {
    throw ShapeMismatch("embedding has " + std::to_string(e.objects()) +
                        " objects, matrix has " + std::to_string(m));
  }
  std::vector<Box> boxes;
  boxes.reserve(m);
  for (std::size_t i = 0; i < m; ++i) boxes.emplace_back(e.interval_coords[i]);

  StressReport report;
  double denom = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const double d_lo = min_box_distance(boxes[i], boxes[j]).value;
      const double d_hi = max_box_distance(boxes[i], boxes[j]).value;
      const double delta_lo = delta.entry(i, j).lo();
      const double delta_hi = delta.entry(i, j).hi();
      report.per_pair.push_back({i, j, d_lo, d_hi, delta_lo, delta_hi});
      report.raw_stress += (d_lo - delta_lo) * (d_lo - delta_lo) +
                           (d_hi - delta_hi) * (d_hi - delta_hi);
      denom += delta_lo * delta_lo + delta_hi * delta_hi;
    }
  }
  report.normalized_stress = denom > 0.0 ? report.raw_stress / denom : 0.0;
  return report;
}

/// Fraction of positive eigenvalue mass captured by the top q dimensions.
inline double variance_explained(const std::vector<double>& eigenvalues,
                                 std::size_t q) {
  if (q < 1) throw InvalidInput("dimension count must be at least 1");
  const double eps = positive_eigenvalue_threshold(eigenvalues);
  double total = 0.0;
  bool any = false;
  for (double lambda : eigenvalues) {
    if (lambda > eps && lambda > 0.0) any = true;
    total += std::max(lambda, 0.0);
  }
  if (!any) {
    throw AllNonpositive("no eigenvalue above the positivity threshold");
  }
  double top = 0.0;
  for (std::size_t r = 0; r < std::min(q, eigenvalues.size()); ++r) {
    top += std::max(eigenvalues[r], 0.0);
  }
  return top / total;
}

struct MethodComparison {
  // Per dimension: Pearson correlation of interval midpoints, sign-aligned
  // to be nonnegative, plus mean interval widths from both methods.
  std::vector<double> center_correlation;
  std::vector<double> mean_width_a;
  std::vector<double> mean_width_b;
  std::vector<double> width_ratio;  // mean_width_a / mean_width_b, 0 if empty
};

/// Diagnostic comparison of two interval configurations (e.g. scaling vs
/// vertex PCA) over the same objects. No thresholds are implied; exact
/// agreement between the two methods is not attainable in general.
inline MethodComparison compare_methods(
    const std::vector<std::vector<Interval>>& a,
    const std::vector<std::vector<Interval>>& b) {
  if (a.size() != b.size() || a.size() < 3) {
    throw ShapeMismatch("need matching inputs with at least 3 objects");
  }
  const std::size_t m = a.size();
  const std::size_t q = a.front().size();
  for (std::size_t i = 0; i < m; ++i) {
    if (a[i].size() != q || b[i].size() != q) {
      throw ShapeMismatch("dimension mismatch between methods");
    }
  }
  MethodComparison out;
  for (std::size_t r = 0; r < q; ++r) {
    double ma = 0.0, mb = 0.0, wa = 0.0, wb = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      ma += a[i][r].midpoint();
      mb += b[i][r].midpoint();
      wa += a[i][r].width();
      wb += b[i][r].width();
    }
    ma /= static_cast<double>(m);
    mb /= static_cast<double>(m);
    wa /= static_cast<double>(m);
    wb /= static_cast<double>(m);
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      const double dx = a[i][r].midpoint() - ma;
      const double dy = b[i][r].midpoint() - mb;
      sxy += dx * dy;
      sxx += dx * dx;
      syy += dy * dy;
    }
    const double corr =
        sxx > 0.0 && syy > 0.0 ? std::abs(sxy) / std::sqrt(sxx * syy) : 0.0;
    out.center_correlation.push_back(corr);
    out.mean_width_a.push_back(wa);
    out.mean_width_b.push_back(wb);
    out.width_ratio.push_back(wb > 0.0 ? wa / wb : 0.0);
  }
  return out;
}

}  // namespace interscal
