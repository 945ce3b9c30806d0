#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "interscal/errors.hpp"

namespace interscal {

/// Closed real interval [lo, hi]. Bounds are finite and lo <= hi; degenerate
/// intervals (lo == hi) are legal and stand for ordinary point values.
class Interval {
 public:
  Interval(double lo, double hi) : lo_(lo), hi_(hi) {
    if (!std::isfinite(lo) || !std::isfinite(hi)) {
      throw ReversedBounds("interval bounds must be finite");
    }
    if (lo > hi) {
      throw ReversedBounds("interval bounds reversed: lo=" +
                           std::to_string(lo) + " > hi=" + std::to_string(hi));
    }
  }

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  double width() const { return hi_ - lo_; }
  double midpoint() const { return (lo_ + hi_) / 2.0; }
  bool degenerate() const { return lo_ == hi_; }
  bool contains(double x) const { return lo_ <= x && x <= hi_; }

  friend bool operator==(const Interval& a, const Interval& b) {
    return a.lo_ == b.lo_ && a.hi_ == b.hi_;
  }

 private:
  double lo_;
  double hi_;
};

inline Interval make_interval(double lo, double hi) { return Interval(lo, hi); }

/// Axis-aligned hypercube in R^n: one Interval per coordinate.
class Box {
 public:
  explicit Box(std::vector<Interval> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) {
      throw InvalidInput("box needs at least one coordinate");
    }
  }

  std::size_t dim() const { return coords_.size(); }
  const Interval& operator[](std::size_t k) const { return coords_[k]; }
  const std::vector<Interval>& coords() const { return coords_; }

  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }

 private:
  std::vector<Interval> coords_;
};

/// m objects described by n interval variables; all rows share dimension n.
class IntervalTable {
 public:
  IntervalTable(std::vector<Box> rows, std::vector<std::string> column_labels,
                std::vector<std::string> row_labels = {})
      : rows_(std::move(rows)),
        column_labels_(std::move(column_labels)),
        row_labels_(std::move(row_labels)) {
    if (rows_.empty()) {
      throw InvalidInput("interval table needs at least one object");
    }
    const std::size_t n = rows_.front().dim();
    for (const Box& b : rows_) {
      if (b.dim() != n) {
        throw DimensionMismatch("table rows disagree on dimension");
      }
    }
    if (column_labels_.empty()) {
      for (std::size_t k = 0; k < n; ++k) {
        column_labels_.push_back("X" + std::to_string(k + 1));
      }
    }
    if (column_labels_.size() != n) {
      throw ShapeMismatch("column label count does not match dimension");
    }
    if (row_labels_.empty()) {
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        row_labels_.push_back("S" + std::to_string(i + 1));
      }
    }
    if (row_labels_.size() != rows_.size()) {
      throw ShapeMismatch("row label count does not match object count");
    }
  }

  std::size_t objects() const { return rows_.size(); }
  std::size_t dim() const { return rows_.front().dim(); }
  const Box& row(std::size_t i) const { return rows_.at(i); }
  const std::vector<Box>& rows() const { return rows_; }
  const std::vector<std::string>& column_labels() const {
    return column_labels_;
  }
  const std::vector<std::string>& row_labels() const { return row_labels_; }

 private:
  std::vector<Box> rows_;
  std::vector<std::string> column_labels_;
  std::vector<std::string> row_labels_;
};

/// How the self-dissimilarity entries of a matrix are to be read: pairwise
/// judgment data has [0,0] on the diagonal, feature-derived matrices carry
/// [0, diameter] there.
enum class SelfMode { PairwiseZero, FeatureDerived };

inline const char* to_string(SelfMode m) {
  return m == SelfMode::PairwiseZero ? "pairwise" : "feature";
}

/// Symmetric m x m matrix of interval dissimilarities. The container itself
/// only enforces shape; validate_dissim reports violations of symmetry,
/// nonnegativity, and the self-entry convention.
class IntervalDissimMatrix {
 public:
  IntervalDissimMatrix(SelfMode mode, std::vector<std::vector<Interval>> rows,
                       std::vector<std::string> labels = {})
      : mode_(mode), entries_(std::move(rows)), labels_(std::move(labels)) {
    if (entries_.empty()) {
      throw InvalidInput("dissimilarity matrix needs at least one object");
    }
    for (const auto& r : entries_) {
      if (r.size() != entries_.size()) {
        throw ShapeMismatch("dissimilarity matrix is not square");
      }
    }
    if (labels_.empty()) {
      for (std::size_t i = 0; i < entries_.size(); ++i) {
        labels_.push_back("S" + std::to_string(i + 1));
      }
    }
    if (labels_.size() != entries_.size()) {
      throw ShapeMismatch("label count does not match object count");
    }
  }

  /// All-[0,0] matrix of the given order; a starting point for builders.
  static IntervalDissimMatrix zeros(std::size_t m, SelfMode mode) {
    std::vector<std::vector<Interval>> rows(
        m, std::vector<Interval>(m, Interval(0.0, 0.0)));
    return IntervalDissimMatrix(mode, std::move(rows));
  }

  std::size_t size() const { return entries_.size(); }
  SelfMode self_mode() const { return mode_; }
  const Interval& entry(std::size_t i, std::size_t j) const {
    return entries_.at(i).at(j);
  }
  const std::vector<std::vector<Interval>>& entries() const {
    return entries_;
  }
  const std::vector<std::string>& labels() const { return labels_; }

 private:
  SelfMode mode_;
  std::vector<std::vector<Interval>> entries_;
  std::vector<std::string> labels_;
};

enum class ViolationKind { Asymmetry, NegativeLowerBound, SelfDissim };

struct Violation {
  ViolationKind kind;
  std::size_t i;
  std::size_t j;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks every matrix invariant and lists each violation with its location.
/// An empty report means the matrix is valid input for the scaling pipeline.
inline ValidationReport validate_dissim(const IntervalDissimMatrix& d) {
  ValidationReport report;
  const std::size_t m = d.size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (!(d.entry(i, j) == d.entry(j, i))) {
        report.violations.push_back(
            {ViolationKind::Asymmetry, i, j,
             "entries (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                 ") and (" + std::to_string(j + 1) + "," +
                 std::to_string(i + 1) + ") differ"});
      }
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      if (d.entry(i, j).lo() < 0.0) {
        report.violations.push_back(
            {ViolationKind::NegativeLowerBound, i, j,
             "negative lower bound at (" + std::to_string(i + 1) + "," +
                 std::to_string(j + 1) + ")"});
      }
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    const Interval& self = d.entry(i, i);
    const bool bad = d.self_mode() == SelfMode::PairwiseZero
                         ? (self.lo() != 0.0 || self.hi() != 0.0)
                         : (self.lo() != 0.0);
    if (bad) {
      report.violations.push_back(
          {ViolationKind::SelfDissim, i, i,
           "self entry at (" + std::to_string(i + 1) + "," +
               std::to_string(i + 1) + ") violates " +
               std::string(to_string(d.self_mode())) + " mode"});
    }
  }
  return report;
}

}  // namespace interscal
