// SPDX-License-Identifier: Apache-2.0
//
// F_{q^m}-linear codes <X, F_1, ..., F_k> under the coefficientwise pairing
// <f, g> = sum_l f_l g_l.
#pragma once

#include <vector>

#include "linhull/linops.hpp"
#include "linhull/matrix.hpp"

namespace linhull {

struct RdCode {
  TowerPtr tower;
  /// F_1..F_k; X is implicit.
  std::vector<QPoly> generators;
  bool independent = false;

  /// X followed by the generators.
  std::vector<QPoly> all_generators() const;
};

/// Throws InvalidArgument when a generator has a nonzero X coefficient.
RdCode make_rd_code(TowerPtr tower, std::vector<QPoly> generators);

struct RdHullReport {
  Matrix M;
  std::size_t k = 0;
  std::size_t rank_M = 0;
  std::size_t hull_dim = 0;
  bool is_lcd = false;
  bool generators_self_orthogonal = false;
  /// Set when the hull is the whole subcode <F_1..F_k>; deciding
  /// self-duality of that subcode needs an ambient space the code does not fix.
  bool ambient_dimension_warning = false;
  std::vector<QPoly> hull_basis;
};

FieldElem delsarte_pair(const QPoly& f, const QPoly& g);
/// k x k matrix of pairings among F_1..F_k. Throws DependentGenerators.
Matrix generator_gram(const RdCode& code);
RdHullReport rd_hull(const RdCode& code);

struct DegeneracyReport {
  bool degenerate = false;
  std::vector<FieldElem> common_kernel;
};

/// Common F_q-kernel of a set of q-polynomials.
DegeneracyReport is_degenerate(const TowerPtr& tower, const std::vector<QPoly>& generators);
/// Same, over X and the code's generators.
DegeneracyReport is_degenerate(const RdCode& code);

}  // namespace linhull
