// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "linhull/field.hpp"
#include "linhull/matrix.hpp"

namespace linhull {

/// F_q-subspace of GF(q^m) with an independent spanning list.
class SubspaceFq {
 public:
  SubspaceFq() = default;
  /// Span of arbitrary elements; dependent ones are dropped (leftmost kept).
  static SubspaceFq span(TowerPtr tower, const std::vector<FieldElem>& elems);
  static SubspaceFq zero(TowerPtr tower);
  static SubspaceFq full(TowerPtr tower);

  const TowerPtr& tower() const noexcept { return tower_; }
  const std::vector<FieldElem>& basis() const noexcept { return basis_; }
  std::size_t dim() const noexcept { return basis_.size(); }

  bool contains(FieldElem x) const;
  /// Rows are coordinate vectors of the basis in coordinate_basis(tower).
  Matrix coordinate_rows() const;

  friend bool operator==(const SubspaceFq& a, const SubspaceFq& b);

 private:
  TowerPtr tower_;
  std::vector<FieldElem> basis_;
};

/// Throws TowerMismatch.
SubspaceFq intersect(const SubspaceFq& a, const SubspaceFq& b);

}  // namespace linhull
