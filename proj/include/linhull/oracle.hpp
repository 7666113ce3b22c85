// SPDX-License-Identifier: Apache-2.0
//
// Brute-force references: duals under the trace form, hulls by definition,
// and rank-distance hulls by solving the full linear system.
#pragma once

#include <cstdint>
#include <vector>

#include "linhull/linops.hpp"
#include "linhull/subspace.hpp"

namespace linhull {

inline constexpr std::uint64_t kOracleCap = std::uint64_t{1} << 12;
inline constexpr std::uint64_t kEnumerationCap = std::uint64_t{1} << 8;

/// {y : Tr(xy) = 0 for x in S} by a linear solve. Throws SizeCapExceeded.
SubspaceFq trace_dual(const SubspaceFq& S);
std::size_t hull_by_definition(const SubspaceFq& S);
std::size_t hull_by_definition(const QPoly& phi);

/// Same quantity by listing every element of S and of its dual.
std::size_t hull_by_enumeration(const SubspaceFq& S);

/// Every pair on the F_{q^d}-line through x0 has trace zero.
bool line_isotropic_by_enumeration(const TowerPtr& tower, FieldElem x0, std::uint32_t d);

/// dim over F_{q^m} of rowspace(A) cap ker(A), where A stacks the coefficient
/// vectors of the generators. Rows must be independent.
std::size_t rd_hull_by_definition(const std::vector<QPoly>& generators);

}  // namespace linhull
