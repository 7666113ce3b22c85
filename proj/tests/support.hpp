// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <random>
#include <vector>

#include "linhull/field.hpp"
#include "linhull/linops.hpp"
#include "linhull/matrix.hpp"

namespace linhull::testutil {

inline FieldElem random_elem(const FieldTower& t, std::mt19937_64& rng) {
  return t.element(std::uniform_int_distribution<std::uint64_t>(0, t.size() - 1)(rng));
}

inline FieldElem random_nonzero(const FieldTower& t, std::mt19937_64& rng) {
  return t.element(std::uniform_int_distribution<std::uint64_t>(1, t.size() - 1)(rng));
}

inline FieldElem random_base(const FieldTower& t, std::mt19937_64& rng) {
  const auto& b = t.base_elements();
  return b[std::uniform_int_distribution<std::size_t>(0, b.size() - 1)(rng)];
}

inline QPoly random_qpoly(const TowerPtr& T, std::mt19937_64& rng) {
  std::vector<FieldElem> c;
  for (std::uint32_t i = 0; i < T->m(); ++i) c.push_back(random_elem(*T, rng));
  return QPoly(T, c);
}

inline Matrix random_matrix(const TowerPtr& T, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  Matrix a(T, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a(i, j) = random_elem(*T, rng);
  return a;
}

/// Column j = image of the j-th element of `elems`, as the F_q-span.
inline std::vector<FieldElem> apply_all(const QPoly& L, const std::vector<FieldElem>& xs) {
  std::vector<FieldElem> out;
  for (auto x : xs) out.push_back(L.eval(x));
  return out;
}

}  // namespace linhull::testutil
