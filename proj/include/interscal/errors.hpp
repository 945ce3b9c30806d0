#pragma once

#include <stdexcept>
#include <string>

namespace interscal {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Interval constructed with lo > hi, usually a corrupt input row.
class ReversedBounds : public Error {
 public:
  using Error::Error;
};

/// Two boxes (or coordinate vectors) of different dimension.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Input rejected by validation before a pipeline stage.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Eigensolver did not converge within the sweep budget.
class NoConvergence : public Error {
 public:
  using Error::Error;
};

/// Rotation matrix fails the orthogonality check.
class NotOrthogonal : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

/// Vertex enumeration would need more than 2^20 corners per object.
class DimensionTooLarge : public Error {
 public:
  using Error::Error;
};

/// A column has no spread, so it cannot be standardized.
class ZeroVariance : public Error {
 public:
  ZeroVariance(const std::string& what, std::size_t column)
      : Error(what), column_(column) {}
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

/// No eigenvalue above the positivity threshold.
class AllNonpositive : public Error {
 public:
  using Error::Error;
};

/// Malformed text input; message carries line/column location.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Filesystem failure (missing input, unwritable output).
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace interscal
