#pragma once

#include <cmath>
#include <cstdio>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "interscal/errors.hpp"
#include "interscal/interval.hpp"
#include "interscal/linalg.hpp"

namespace interscal {

/// The 2m x 2m numeric dissimilarity matrix driving the scaling: two rows
/// per object, mixing the minimum, mean, and maximum dissimilarities.
class AugmentedMatrix {
 public:
  AugmentedMatrix(std::size_t base_m, SymmetricMatrix entries, SelfMode mode)
      : base_m_(base_m), entries_(std::move(entries)), self_mode_(mode) {}

  std::size_t base_m() const { return base_m_; }
  const SymmetricMatrix& matrix() const { return entries_; }
  SelfMode self_mode() const { return self_mode_; }

 private:
  std::size_t base_m_;
  SymmetricMatrix entries_;
  SelfMode self_mode_;
};

/// Expands an interval dissimilarity matrix into its augmented form. For
/// objects i != j the 2x2 block is [[lo, mean], [mean, hi]]; the diagonal
/// block of object i is [[0, hi_ii], [hi_ii, 0]].
inline AugmentedMatrix build_augmented(const IntervalDissimMatrix& delta) {
  const ValidationReport report = validate_dissim(delta);
  if (!report.ok()) {
    throw InvalidInput("invalid dissimilarity matrix: " +
                       report.violations.front().message);
  }
  const std::size_t m = delta.size();
  SymmetricMatrix a(2 * m);
  for (std::size_t i = 0; i < m; ++i) {
    a.set(2 * i, 2 * i + 1, delta.entry(i, i).hi());
    for (std::size_t j = i + 1; j < m; ++j) {
      const Interval& d = delta.entry(i, j);
      a.set(2 * i, 2 * j, d.lo());
      a.set(2 * i, 2 * j + 1, d.midpoint());
      a.set(2 * i + 1, 2 * j, d.midpoint());
      a.set(2 * i + 1, 2 * j + 1, d.hi());
    }
  }
  return AugmentedMatrix(m, std::move(a), delta.self_mode());
}

/// Result of scaling interval dissimilarities: 2m embedded points, folded
/// into one interval per object and dimension (rows 2i and 2i+1 belong to
/// object i).
struct IntervalEmbedding {
  std::vector<double> eigenvalues;  // all 2m, descending
  Matrix point_coords;              // 2m x dims
  std::vector<std::vector<Interval>> interval_coords;  // m x dims
  std::size_t dims = 0;
  std::size_t positive_rank = 0;
  bool rank_deficient = false;
  std::vector<std::string> labels;  // object names, in input order

  std::size_t objects() const { return interval_coords.size(); }
};

namespace detail {

inline std::vector<std::vector<Interval>> fold_intervals(const Matrix& coords,
                                                         std::size_t m) {
  std::vector<std::vector<Interval>> out(m);
  for (std::size_t i = 0; i < m; ++i) {
    out[i].reserve(coords.cols());
    for (std::size_t r = 0; r < coords.cols(); ++r) {
      const double x = coords(2 * i, r);
      const double y = coords(2 * i + 1, r);
      out[i].emplace_back(std::min(x, y), std::max(x, y));
    }
  }
  return out;
}

}  // namespace detail

/// Full pipeline: augment, double-center, eigendecompose, take coordinates
/// for the q leading dimensions, and fold each object's two points into
/// interval principal coordinates.
inline IntervalEmbedding embed(const IntervalDissimMatrix& delta,
                               std::size_t q) {
  if (q < 1) throw InvalidInput("dimension count must be at least 1");
  const AugmentedMatrix aug = build_augmented(delta);
  const ClassicalMdsResult mds = classical_mds(aug.matrix(), q);
  IntervalEmbedding e;
  e.eigenvalues = mds.eigenvalues;
  e.point_coords = mds.coords;
  e.dims = q;
  e.positive_rank = mds.positive_rank;
  e.rank_deficient = mds.rank_deficient;
  e.interval_coords = detail::fold_intervals(e.point_coords, delta.size());
  e.labels = delta.labels();
  return e;
}

/// Applies an orthogonal transform to the point coordinates and re-derives
/// the interval fold. Eigenvalues are untouched.
inline IntervalEmbedding rotate_embedding(const IntervalEmbedding& e,
                                          const Matrix& t) {
  if (t.rows() != e.dims || t.cols() != e.dims) {
    throw NotOrthogonal("rotation must be " + std::to_string(e.dims) + "x" +
                        std::to_string(e.dims));
  }
  const Matrix gram = t.multiply(t.transposed());
  for (std::size_t i = 0; i < t.rows(); ++i) {
    for (std::size_t j = 0; j < t.cols(); ++j) {
      const double expect = i == j ? 1.0 : 0.0;
      if (std::abs(gram(i, j) - expect) > 1e-10) {
        throw NotOrthogonal("matrix is not orthogonal within 1e-10");
      }
    }
  }
  IntervalEmbedding out = e;
  out.point_coords = e.point_coords.multiply(t);
  out.interval_coords =
      detail::fold_intervals(out.point_coords, e.interval_coords.size());
  return out;
}

namespace detail {

// Two decimals, banker's rounding via the usual printf path; "-0.00" is
// normalized to "0.00".
inline std::string format_2dp(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", x);
  std::string s(buf);
  if (s == "-0.00") s = "0.00";
  return s;
}

}  // namespace detail

/// Renders one coordinate row as a conjunction of per-dimension interval
/// memberships, e.g. "a(w)=[Y1(w) ∈ [4.43,7.22]] ∧ [Y2(w) ∈ [-0.05,0.49]]".
/// Dimension labels default to Y1..Yq.
inline std::string describe_intervals(std::span<const Interval> coords,
                                      std::span<const std::string> labels = {}) {
  std::string out = "a(w)=";
  for (std::size_t r = 0; r < coords.size(); ++r) {
    if (r > 0) out += " ∧ ";
    const std::string label =
        r < labels.size() ? labels[r] : "Y" + std::to_string(r + 1);
    out += "[" + label + "(w) ∈ [" + detail::format_2dp(coords[r].lo()) + "," +
           detail::format_2dp(coords[r].hi()) + "]]";
  }
  return out;
}

inline std::string describe_symbolic(const IntervalEmbedding& e, std::size_t i,
                                     std::span<const std::string> labels = {}) {
  if (i >= e.objects()) {
    throw IndexOutOfRange("object index " + std::to_string(i) +
                          " out of range (m=" + std::to_string(e.objects()) +
                          ")");
  }
  return describe_intervals(e.interval_coords[i], labels);
}

}  // namespace interscal
