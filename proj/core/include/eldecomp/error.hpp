#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace eldecomp {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input is well-formed but violates a mathematical or physical precondition
/// (asymmetric tensor, non-positive density, zero tensor, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A rank-4 input failed the minor/major symmetry check.
class SymmetryViolation : public ValidationError {
 public:
  SymmetryViolation(const std::string& what, std::array<int, 4> index, double magnitude)
      : ValidationError(what), index_(index), magnitude_(magnitude) {}

  /// Zero-based (i, j, k, l) of the entry needing the largest correction.
  [[nodiscard]] const std::array<int, 4>& index() const noexcept { return index_; }
  [[nodiscard]] double magnitude() const noexcept { return magnitude_; }

 private:
  std::array<int, 4> index_;
  double magnitude_;
};

/// A 6x6 Voigt matrix is not symmetric. Indices are the one-based Voigt labels.
class VoigtAsymmetry : public ValidationError {
 public:
  VoigtAsymmetry(const std::string& what, int row, int col, double magnitude)
      : ValidationError(what), row_(row), col_(col), magnitude_(magnitude) {}

  [[nodiscard]] int row() const noexcept { return row_; }
  [[nodiscard]] int col() const noexcept { return col_; }
  [[nodiscard]] double magnitude() const noexcept { return magnitude_; }

 private:
  int row_;
  int col_;
  double magnitude_;
};

/// File could not be read, or its contents do not follow the documented schema.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace eldecomp
