// SPDX-License-Identifier: Apache-2.0
#include "linhull/matrix.hpp"

#include <utility>

#include "linhull/error.hpp"

namespace linhull {

void require_same_tower(const TowerPtr& a, const TowerPtr& b) {
  if (a.get() != b.get()) raise(ErrorCode::TowerMismatch, "objects belong to different field towers");
}

Matrix::Matrix(TowerPtr tower, std::size_t rows, std::size_t cols)
    : tower_(std::move(tower)), rows_(rows), cols_(cols), data_(rows * cols, FieldElem{}) {}

Matrix Matrix::identity(TowerPtr tower, std::size_t n) {
  Matrix out(std::move(tower), n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = FieldElem{1};
  return out;
}

Matrix Matrix::from_rows(TowerPtr tower, const std::vector<std::vector<FieldElem>>& rows) {
  const std::size_t c = rows.empty() ? 0 : rows[0].size();
  Matrix out(std::move(tower), rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) raise(ErrorCode::InvalidArgument, "ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) out(i, j) = rows[i][j];
  }
  return out;
}

std::vector<FieldElem> Matrix::row(std::size_t i) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

std::vector<FieldElem> Matrix::col(std::size_t j) const {
  std::vector<FieldElem> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(tower_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  require_same_tower(tower_, o.tower_);
  if (rows_ != o.rows_ || cols_ != o.cols_) raise(ErrorCode::InvalidArgument, "shape mismatch in +");
  Matrix out(tower_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = tower_->add(data_[i], o.data_[i]);
  return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
  require_same_tower(tower_, o.tower_);
  if (cols_ != o.rows_) raise(ErrorCode::InvalidArgument, "shape mismatch in *");
  const FieldTower& t = *tower_;
  Matrix out(tower_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const FieldElem a = (*this)(i, k);
      if (a.packed == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) out(i, j) = t.add(out(i, j), t.mul(a, o(k, j)));
    }
  return out;
}

std::vector<FieldElem> Matrix::apply(const std::vector<FieldElem>& v) const {
  if (v.size() != cols_) raise(ErrorCode::InvalidArgument, "shape mismatch in apply");
  const FieldTower& t = *tower_;
  std::vector<FieldElem> out(rows_, t.zero());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] = t.add(out[i], t.mul((*this)(i, j), v[j]));
  return out;
}

Matrix Matrix::scaled(FieldElem c) const {
  Matrix out(tower_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = tower_->mul(c, data_[i]);
  return out;
}

Matrix Matrix::stack(const Matrix& o) const {
  require_same_tower(tower_, o.tower_);
  if (cols_ != o.cols_ && rows_ != 0 && o.rows_ != 0) raise(ErrorCode::InvalidArgument, "shape mismatch in stack");
  Matrix out(tower_, rows_ + o.rows_, rows_ ? cols_ : o.cols_);
  std::copy(data_.begin(), data_.end(), out.data_.begin());
  std::copy(o.data_.begin(), o.data_.end(), out.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
  return out;
}

Matrix Matrix::augment(const Matrix& o) const {
  require_same_tower(tower_, o.tower_);
  if (rows_ != o.rows_) raise(ErrorCode::InvalidArgument, "shape mismatch in augment");
  Matrix out(tower_, rows_, cols_ + o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < o.cols_; ++j) out(i, cols_ + j) = o(i, j);
  }
  return out;
}

bool Matrix::is_zero() const noexcept {
  for (auto e : data_)
    if (e.packed != 0) return false;
  return true;
}

bool Matrix::is_symmetric() const noexcept {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool Matrix::entries_in_base_field() const noexcept {
  for (auto e : data_)
    if (!tower_->in_base_field(e)) return false;
  return true;
}

Matrix Matrix::rref(std::vector<std::size_t>* pivot_cols) const {
  Matrix a = *this;
  if (pivot_cols) pivot_cols->clear();
  if (!tower_) return a;
  const FieldTower& t = *tower_;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
    std::size_t piv = rank;
    while (piv < rows_ && a(piv, c).packed == 0) ++piv;
    if (piv == rows_) continue;
    if (piv != rank)
      for (std::size_t j = 0; j < cols_; ++j) std::swap(a(piv, j), a(rank, j));
    const FieldElem s = t.inv(a(rank, c));
    for (std::size_t j = 0; j < cols_; ++j) a(rank, j) = t.mul(a(rank, j), s);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == rank) continue;
      const FieldElem f = a(i, c);
      if (f.packed == 0) continue;
      for (std::size_t j = c; j < cols_; ++j) a(i, j) = t.sub(a(i, j), t.mul(f, a(rank, j)));
    }
    if (pivot_cols) pivot_cols->push_back(c);
    ++rank;
  }
  return a;
}

std::size_t Matrix::rank() const {
  std::vector<std::size_t> piv;
  rref(&piv);
  return piv.size();
}

std::vector<std::vector<FieldElem>> Matrix::kernel() const {
  std::vector<std::size_t> piv;
  const Matrix r = rref(&piv);
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<std::vector<FieldElem>> out;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    std::vector<FieldElem> v(cols_, FieldElem{});
    v[f] = FieldElem{1};
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = tower_->neg(r(i, f));
    out.push_back(std::move(v));
  }
  return out;
}

FieldElem Matrix::det() const {
  if (rows_ != cols_) raise(ErrorCode::InvalidArgument, "determinant of a non-square matrix");
  if (rows_ == 0) return FieldElem{1};
  const FieldTower& t = *tower_;
  Matrix a = *this;
  FieldElem d = t.one();
  for (std::size_t c = 0; c < cols_; ++c) {
    std::size_t piv = c;
    while (piv < rows_ && a(piv, c).packed == 0) ++piv;
    if (piv == rows_) return t.zero();
    if (piv != c) {
      for (std::size_t j = 0; j < cols_; ++j) std::swap(a(piv, j), a(c, j));
      d = t.neg(d);
    }
    d = t.mul(d, a(c, c));
    const FieldElem s = t.inv(a(c, c));
    for (std::size_t i = c + 1; i < rows_; ++i) {
      const FieldElem f = t.mul(a(i, c), s);
      if (f.packed == 0) continue;
      for (std::size_t j = c; j < cols_; ++j) a(i, j) = t.sub(a(i, j), t.mul(f, a(c, j)));
    }
  }
  return d;
}

Matrix Matrix::inverse() const {
  if (rows_ != cols_) raise(ErrorCode::InvalidArgument, "inverse of a non-square matrix");
  std::vector<std::size_t> piv;
  const Matrix r = augment(identity(tower_, rows_)).rref(&piv);
  if (piv.size() < rows_ || piv[rows_ - 1] >= cols_) raise(ErrorCode::DegenerateInput, "matrix is singular");
  Matrix out(tower_, rows_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < rows_; ++j) out(i, j) = r(i, cols_ + j);
  return out;
}

}  // namespace linhull
