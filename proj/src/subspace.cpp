// SPDX-License-Identifier: Apache-2.0
#include "linhull/subspace.hpp"

#include "linhull/error.hpp"
#include "linhull/linops.hpp"

namespace linhull {

SubspaceFq SubspaceFq::span(TowerPtr tower, const std::vector<FieldElem>& elems) {
  if (!tower) raise(ErrorCode::InvalidArgument, "null tower");
  const Basis& cb = coordinate_basis(tower);
  const std::size_t m = tower->m();
  // Columns are coordinate vectors, so pivot columns pick the leftmost
  // independent elements.
  Matrix cols(tower, m, elems.size());
  for (std::size_t j = 0; j < elems.size(); ++j) {
    const auto c = cb.coords(elems[j]);
    for (std::size_t i = 0; i < m; ++i) cols(i, j) = c[i];
  }
  std::vector<std::size_t> piv;
  cols.rref(&piv);
  SubspaceFq s;
  s.tower_ = std::move(tower);
  for (auto j : piv) s.basis_.push_back(elems[j]);
  return s;
}

SubspaceFq SubspaceFq::zero(TowerPtr tower) { return span(std::move(tower), {}); }

SubspaceFq SubspaceFq::full(TowerPtr tower) {
  const Basis& cb = coordinate_basis(tower);
  return span(tower, {cb.elements().begin(), cb.elements().end()});
}

Matrix SubspaceFq::coordinate_rows() const {
  const Basis& cb = coordinate_basis(tower_);
  std::vector<std::vector<FieldElem>> rows;
  for (auto x : basis_) rows.push_back(cb.coords(x));
  if (rows.empty()) return Matrix(tower_, 0, tower_->m());
  return Matrix::from_rows(tower_, rows);
}

bool SubspaceFq::contains(FieldElem x) const {
  std::vector<FieldElem> elems(basis_);
  elems.push_back(x);
  return span(tower_, elems).dim() == dim();
}

bool operator==(const SubspaceFq& a, const SubspaceFq& b) {
  if (a.tower_.get() != b.tower_.get() || a.dim() != b.dim()) return false;
  for (auto x : b.basis_)
    if (!a.contains(x)) return false;
  return true;
}

SubspaceFq intersect(const SubspaceFq& a, const SubspaceFq& b) {
  require_same_tower(a.tower(), b.tower());
  const TowerPtr& tower = a.tower();
  if (a.dim() == 0 || b.dim() == 0) return SubspaceFq::zero(tower);
  // Solve sum x_i a_i - sum y_j b_j = 0 in coordinates.
  const Matrix sys = a.coordinate_rows().stack(b.coordinate_rows().scaled(tower->neg(tower->one()))).transpose();
  std::vector<FieldElem> out;
  const FieldTower& t = *tower;
  for (const auto& v : sys.kernel()) {
    FieldElem x = t.zero();
    for (std::size_t i = 0; i < a.dim(); ++i) x = t.add(x, t.mul(v[i], a.basis()[i]));
    out.push_back(x);
  }
  return SubspaceFq::span(tower, out);
}

}  // namespace linhull
