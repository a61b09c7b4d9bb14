#include "eaqmds/matrix.hpp"

#include <algorithm>
#include <stdexcept>

#include "eaqmds/kernels.hpp"

namespace eaqmds {

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, Field::zero()) {}

Matrix Matrix::identity(FieldPtr field, std::size_t n) {
  Matrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Field::one();
  return m;
}

Matrix Matrix::from_rows(FieldPtr field, const std::vector<std::vector<Elem>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(std::move(field), rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InvalidInput("Matrix::from_rows: ragged rows");
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

bool Matrix::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](Elem e) { return e == Field::zero(); });
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Matrix Matrix::conjugate() const {
  Matrix out(field_, rows_, cols_);
  const Field& F = *field_;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = F.conj(data_[i]);
  return out;
}

Matrix Matrix::columns(std::span<const std::size_t> cols) const {
  Matrix out(field_, rows_, cols.size());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t j = 0; j < cols.size(); ++j) out(r, j) = (*this)(r, cols[j]);
  }
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw InvalidInput("Matrix product: dimension mismatch");
  return kernels::multiply_transposed(a, b.transpose());
}

RowEchelon row_echelon(Matrix m) {
  const Field& F = *m.field();
  const std::size_t R = m.rows();
  const std::size_t C = m.cols();
  std::vector<std::size_t> end(R, 0);
  for (std::size_t r = 0; r < R; ++r) {
    const auto row = m.row(r);
    for (std::size_t c = C; c-- > 0;) {
      if (row[c] != Field::zero()) {
        end[r] = c + 1;
        break;
      }
    }
  }

  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t c = 0; c < C && next < R; ++c) {
    std::size_t piv = next;
    while (piv < R && m(piv, c) == Field::zero()) ++piv;
    if (piv == R) continue;
    if (piv != next) {
      std::swap_ranges(m.row(piv).begin(), m.row(piv).end(), m.row(next).begin());
      std::swap(end[piv], end[next]);
    }
    auto prow = m.row(next);
    const std::size_t pend = end[next];
    const Elem s = F.inv(prow[c]);
    for (std::size_t j = c; j < pend; ++j) prow[j] = F.mul(prow[j], s);
    for (std::size_t r = next + 1; r < R; ++r) {
      auto row = m.row(r);
      if (row[c] == Field::zero()) continue;
      const Elem f = F.neg(row[c]);
      for (std::size_t j = c; j < pend; ++j) row[j] = F.fma(row[j], f, prow[j]);
      end[r] = std::max(end[r], pend);
    }
    pivots.push_back(c);
    ++next;
  }
  end.resize(pivots.size());
  return RowEchelon{std::move(m), std::move(pivots), std::move(end)};
}

std::size_t rank(const Matrix& m) { return row_echelon(m).rank(); }

Matrix nullspace(const Matrix& m) { return kernels::back_substitute(row_echelon(m)); }

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw InvalidInput("inverse: matrix is not square");
  const std::size_t n = m.rows();
  const Field& F = *m.field();
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = Field::one();
  }
  RowEchelon ech = row_echelon(std::move(aug));
  if (ech.rank() < n || ech.pivot_cols[n - 1] != n - 1) return std::nullopt;
  Matrix& a = ech.reduced;
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t r = 0; r < i; ++r) {
      const Elem f = a(r, i);
      if (f == Field::zero()) continue;
      const Elem nf = F.neg(f);
      for (std::size_t j = i; j < 2 * n; ++j) a(r, j) = F.fma(a(r, j), nf, a(i, j));
    }
  }
  Matrix out(m.field(), n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) out(r, c) = a(r, n + c);
  }
  return out;
}

}  // namespace eaqmds
