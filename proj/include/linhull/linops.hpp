// SPDX-License-Identifier: Apache-2.0
//
// q-polynomials sum a_i X^(q^i), i < m, acting F_q-linearly on GF(q^m).
#pragma once

#include <vector>

#include "linhull/field.hpp"
#include "linhull/matrix.hpp"

namespace linhull {

class QPoly {
 public:
  QPoly() = default;
  /// Coefficients are zero-padded to length m; longer inputs are folded by
  /// X^(q^m) = X.
  QPoly(TowerPtr tower, std::vector<FieldElem> coeffs);

  static QPoly zero(TowerPtr tower);
  static QPoly identity(TowerPtr tower);
  /// c X^(q^e).
  static QPoly monomial(TowerPtr tower, std::uint32_t e, FieldElem c);
  /// X^(q^e).
  static QPoly frobenius(TowerPtr tower, std::uint32_t e);

  const TowerPtr& tower() const noexcept { return tower_; }
  const std::vector<FieldElem>& coeffs() const noexcept { return a_; }
  FieldElem operator[](std::size_t i) const { return a_.at(i); }
  bool is_zero() const noexcept;

  FieldElem eval(FieldElem x) const;
  QPoly operator+(const QPoly& o) const;
  QPoly scaled(FieldElem c) const;

  friend bool operator==(const QPoly& a, const QPoly& b) noexcept {
    return a.tower_.get() == b.tower_.get() && a.a_ == b.a_;
  }

 private:
  TowerPtr tower_;
  std::vector<FieldElem> a_;
};

FieldElem qpoly_eval(const QPoly& L, FieldElem x);
/// L1 o L2. Throws TowerMismatch.
QPoly qpoly_compose(const QPoly& L1, const QPoly& L2);
/// Adjoint for the trace form Tr(xy).
QPoly qpoly_adjoint(const QPoly& L);
/// lambda X + mu L.
QPoly pencil_member(FieldElem lambda, FieldElem mu, const QPoly& L);

/// m x m matrix over F_q; column j holds coords(L(e_j), basis).
Matrix op_matrix(const QPoly& L, const Basis& basis);

/// A polynomial basis of the tower, built once per tower and shared.
const Basis& coordinate_basis(const TowerPtr& tower);

std::size_t op_rank(const QPoly& L);
std::vector<FieldElem> op_kernel_basis(const QPoly& L);
std::vector<FieldElem> op_image_basis(const QPoly& L);

/// Evaluates L on random samples and checks F_q-linearity. Returns false on
/// the first violation.
bool check_linearity(const QPoly& L, unsigned samples, std::uint64_t seed);

}  // namespace linhull
