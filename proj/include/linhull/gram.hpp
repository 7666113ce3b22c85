// SPDX-License-Identifier: Apache-2.0
//
// Gram matrices of q-polynomial operators for the trace form, and hull
// dimensions of their image codes: dim Hull(im Phi) = rank Phi - rank G.
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "linhull/field.hpp"
#include "linhull/linops.hpp"
#include "linhull/matrix.hpp"

namespace linhull {

enum class HullClass { LCD, SelfOrthogonal, Intermediate };

std::string_view to_string(HullClass c) noexcept;

struct HullReport {
  std::vector<FieldElem> params;
  std::size_t rank_operator = 0;
  std::size_t rank_gram = 0;
  std::size_t hull_dim = 0;
  HullClass classification = HullClass::LCD;
  std::size_t ebits = 0;

  friend bool operator==(const HullReport&, const HullReport&) = default;
};

/// (G)_{st} = Tr(Phi(e_s) Phi(e_t)), entries in F_q.
Matrix gram_of_operator(const QPoly& phi, const Basis& basis);

/// Gamma[i][j] with (Gamma_ij)_{st} = Tr(F_i(e_s) F_j(e_t)).
using StructureMatrices = std::vector<std::vector<Matrix>>;
StructureMatrices structure_matrices(const std::vector<QPoly>& F, const Basis& basis);
/// sum alpha_i alpha_j Gamma_ij; meaningful for alpha in F_q^(k+1).
Matrix combine_structure(const StructureMatrices& gamma, const std::vector<FieldElem>& alpha);

/// Throws DegenerateInput for the zero operator.
HullReport hull_dim(const QPoly& phi, const Basis& basis);
HullReport classify(std::size_t rank_operator, std::size_t rank_gram);

/// dim(im Phi cap ker Phi^dagger).
std::size_t hull_via_adjoint(const QPoly& phi);

/// Intersection of the kernels of all Gamma_ij, as coordinate vectors.
std::vector<std::vector<FieldElem>> universal_null_space(const StructureMatrices& gamma);

/// Sum alpha_i F_i.
QPoly combine_operators(const std::vector<QPoly>& F, const std::vector<FieldElem>& alpha);

/// Representative of the F_q^*-orbit of a nonzero alpha: the first nonzero
/// coordinate is scaled so that its F_q-coordinate vector (in `basis`,
/// ordered by base-field enumeration index) is lexicographically least.
std::vector<FieldElem> canonical_orbit_rep(const TowerPtr& tower, const std::vector<FieldElem>& alpha,
                                           const Basis& basis);

/// Hull counts over the orbit space (F_{q^m}^(k+1) \ 0) / F_q^*. Throws
/// SizeCapExceeded when the space exceeds `cap` points.
std::map<std::size_t, std::uint64_t> orbit_strata(const std::vector<QPoly>& F, const Basis& basis,
                                                  std::uint64_t cap);

}  // namespace linhull
