// SPDX-License-Identifier: Apache-2.0
//
// Dense matrices over a field tower. Entries are elements of GF(q^m); a
// matrix whose entries all lie in GF(q) is an FqMatrix in the usual sense and
// every operation below keeps it there, so its rank/kernel are the GF(q)
// rank/kernel.
#pragma once

#include <cstddef>
#include <vector>

#include "linhull/field.hpp"

namespace linhull {

class Matrix {
 public:
  Matrix() = default;
  Matrix(TowerPtr tower, std::size_t rows, std::size_t cols);

  static Matrix identity(TowerPtr tower, std::size_t n);
  /// Rows given as vectors of equal length.
  static Matrix from_rows(TowerPtr tower, const std::vector<std::vector<FieldElem>>& rows);

  const TowerPtr& tower() const noexcept { return tower_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  FieldElem& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  FieldElem operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<FieldElem> row(std::size_t i) const;
  std::vector<FieldElem> col(std::size_t j) const;

  Matrix transpose() const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  std::vector<FieldElem> apply(const std::vector<FieldElem>& v) const;
  Matrix scaled(FieldElem c) const;
  /// Rows of `o` appended below.
  Matrix stack(const Matrix& o) const;
  /// Columns of `o` appended to the right.
  Matrix augment(const Matrix& o) const;

  bool is_zero() const noexcept;
  bool is_symmetric() const noexcept;
  bool entries_in_base_field() const noexcept;

  /// Reduced row echelon form; pivots are chosen leftmost-first.
  Matrix rref(std::vector<std::size_t>* pivot_cols = nullptr) const;
  std::size_t rank() const;
  /// Basis of the right null space, one vector per free column (ascending).
  std::vector<std::vector<FieldElem>> kernel() const;
  FieldElem det() const;
  /// Throws DegenerateInput when singular.
  Matrix inverse() const;

  friend bool operator==(const Matrix& a, const Matrix& b) noexcept {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  TowerPtr tower_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<FieldElem> data_;
};

/// Throws TowerMismatch when the two handles differ.
void require_same_tower(const TowerPtr& a, const TowerPtr& b);

}  // namespace linhull
