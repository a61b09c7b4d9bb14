#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "eaqmds/field.hpp"

namespace eaqmds {

/// Dense row-major matrix over a Field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols);

  static Matrix identity(FieldPtr field, std::size_t n);
  static Matrix from_rows(FieldPtr field, const std::vector<std::vector<Elem>>& rows);

  const FieldPtr& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Elem operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
  Elem& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
  std::span<const Elem> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }
  std::span<Elem> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }

  bool is_zero() const noexcept;
  Matrix transpose() const;
  /// Entrywise x -> x^q; the field must be an F_{q^2} level.
  Matrix conjugate() const;
  /// H^dagger: conjugate transpose.
  Matrix conj_transpose() const { return conjugate().transpose(); }
  /// Submatrix of the listed columns, in order.
  Matrix columns(std::span<const std::size_t> cols) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  FieldPtr field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

/// Row echelon form with unit pivots and zeros below each pivot.
/// Rows at index >= rank() are zero. `row_end[i]` bounds the support of
/// reduced row i from above, which keeps back-substitution on banded
/// inputs proportional to the band width.
struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivot_cols;
  std::vector<std::size_t> row_end;

  std::size_t rank() const noexcept { return pivot_cols.size(); }
};

RowEchelon row_echelon(Matrix m);
std::size_t rank(const Matrix& m);
/// Rows form a basis of { v : m * v^T = 0 }.
Matrix nullspace(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);

}  // namespace eaqmds
