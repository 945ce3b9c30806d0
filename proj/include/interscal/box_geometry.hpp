#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "interscal/errors.hpp"
#include "interscal/interval.hpp"

namespace interscal {

/// A pair of points, one inside each box, realizing a reported distance.
struct DistanceWitness {
  std::vector<double> point_in_a;
  std::vector<double> point_in_b;
  double value = 0.0;
};

namespace detail {

inline void check_dims(const Box& a, const Box& b) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch("boxes of dimension " + std::to_string(a.dim()) +
                            " and " + std::to_string(b.dim()));
  }
}

}  // namespace detail

/// Minimum Euclidean distance between two axis-aligned boxes. Per coordinate
/// the nearest faces are clamped together; the result is zero exactly when
/// the boxes intersect. The witness points realize the distance.
inline DistanceWitness min_box_distance(const Box& a, const Box& b) {
  detail::check_dims(a, b);
  DistanceWitness w;
  const std::size_t n = a.dim();
  w.point_in_a.resize(n);
  w.point_in_b.resize(n);
  double sum = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    double pa, pb;
    if (a[k].lo() > b[k].hi()) {
      pa = a[k].lo();
      pb = b[k].hi();
    } else if (b[k].lo() > a[k].hi()) {
      pa = a[k].hi();
      pb = b[k].lo();
    } else {
      // Overlapping coordinate: any common point gives gap zero.
      pa = pb = std::max(a[k].lo(), b[k].lo());
    }
    w.point_in_a[k] = pa;
    w.point_in_b[k] = pb;
    const double g = pa - pb;
    sum += g * g;
  }
  w.value = std::sqrt(sum);
  return w;
}

/// Maximum Euclidean distance between two axis-aligned boxes, attained at a
/// pair of opposite corners: per coordinate the farther of the two extreme
/// pairings is chosen.
inline DistanceWitness max_box_distance(const Box& a, const Box& b) {
  detail::check_dims(a, b);
  DistanceWitness w;
  const std::size_t n = a.dim();
  w.point_in_a.resize(n);
  w.point_in_b.resize(n);
  double sum = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double d1 = a[k].hi() - b[k].lo();
    const double d2 = b[k].hi() - a[k].lo();
    double pa, pb;
    if (std::abs(d1) >= std::abs(d2)) {
      pa = a[k].hi();
      pb = b[k].lo();
    } else {
      pa = a[k].lo();
      pb = b[k].hi();
    }
    w.point_in_a[k] = pa;
    w.point_in_b[k] = pb;
    const double h = pa - pb;
    sum += h * h;
  }
  w.value = std::sqrt(sum);
  return w;
}

/// Midpoint of the minimum and maximum box distances.
inline double mean_box_distance(const Box& a, const Box& b) {
  return (min_box_distance(a, b).value + max_box_distance(a, b).value) / 2.0;
}

/// Diameter of a box: the maximum distance between two of its points.
inline double box_diameter(const Box& b) { return max_box_distance(b, b).value; }

/// Dissimilarity matrix of a feature table: entry (i,j) holds the minimum and
/// maximum distance between boxes i and j. Self entries are [0, diameter],
/// so the result is in feature-derived mode. Each pair is computed
/// independently; the output does not depend on evaluation order.
inline IntervalDissimMatrix interval_distance_matrix(const IntervalTable& t) {
  const std::size_t m = t.objects();
  std::vector<std::vector<Interval>> rows(
      m, std::vector<Interval>(m, Interval(0.0, 0.0)));
  for (std::size_t i = 0; i < m; ++i) {
    rows[i][i] = Interval(0.0, box_diameter(t.row(i)));
    for (std::size_t j = i + 1; j < m; ++j) {
      const double lo = min_box_distance(t.row(i), t.row(j)).value;
      const double hi = max_box_distance(t.row(i), t.row(j)).value;
      rows[i][j] = Interval(lo, hi);
      rows[j][i] = rows[i][j];
    }
  }
  return IntervalDissimMatrix(SelfMode::FeatureDerived, std::move(rows),
                              t.row_labels());
}

}  // namespace interscal
