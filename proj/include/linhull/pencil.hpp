// SPDX-License-Identifier: Apache-2.0
//
// The family phi = lambda X + mu L with (lambda, mu) in F_q^2, whose Gram
// matrix is lambda^2 G0 + lambda mu G1 + mu^2 G2, and its discriminant
// Delta(rho) = det(rho^2 G0 + rho G1 + G2).
#pragma once

#include <optional>
#include <vector>

#include "linhull/field.hpp"
#include "linhull/linops.hpp"
#include "linhull/matrix.hpp"
#include "linhull/poly.hpp"

namespace linhull {

struct Discriminant {
  /// Coefficients lie in F_q (embedded in the tower).
  UniPoly delta;
  /// Roots in F_q, enumeration order.
  std::vector<FieldElem> roots;
  /// Degree of the field the interpolation nodes came from, over F_q, and
  /// whether an auxiliary tower was needed for them.
  std::uint32_t node_field_degree = 1;
  bool auxiliary_nodes = false;
};

struct PencilData {
  TowerPtr tower;
  Basis basis;
  QPoly L;
  Matrix G0, G1, G2;
  Discriminant disc;
};

PencilData build_pencil(const QPoly& L, const Basis& basis);
/// Throws DegenerateInput at (0, 0), InvalidArgument outside F_q.
Matrix gram_at(const PencilData& pencil, FieldElem lambda, FieldElem mu);
/// rho^2 G0 + rho G1 + G2.
Matrix monic_pencil_at(const PencilData& pencil, FieldElem rho);
Discriminant discriminant_poly(const PencilData& pencil);

bool is_self_adjoint(const QPoly& L);

struct Char2Reduction {
  Matrix G0, G2;
  /// Coefficients of Delta as a polynomial in rho^2.
  UniPoly delta_in_rho_squared;
};

/// Characteristic two with L self-adjoint; throws NotApplicable otherwise
/// and Mismatch if G1 fails to vanish.
Char2Reduction char2_reduction(const PencilData& pencil);

}  // namespace linhull
