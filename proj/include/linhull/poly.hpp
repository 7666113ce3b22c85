// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "linhull/field.hpp"

namespace linhull {

/// Univariate polynomial over a tower, coefficients low to high with no
/// trailing zeros (the zero polynomial is empty).
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(TowerPtr tower, std::vector<FieldElem> coeffs);

  const TowerPtr& tower() const noexcept { return tower_; }
  const std::vector<FieldElem>& coeffs() const noexcept { return c_; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  FieldElem coeff(std::size_t i) const;
  FieldElem leading() const;

  FieldElem eval(FieldElem x) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly operator+(const UniPoly& o) const;
  UniPoly monic() const;

  /// Unique polynomial of degree < xs.size() through (xs[i], ys[i]).
  static UniPoly interpolate(TowerPtr tower, const std::vector<FieldElem>& xs,
                             const std::vector<FieldElem>& ys);

  /// "a*x^4+x^2+1" with coefficients rendered by the tower; variable name
  /// configurable.
  std::string format(const std::string& var = "x") const;

  friend bool operator==(const UniPoly& a, const UniPoly& b) noexcept { return a.c_ == b.c_; }

 private:
  void trim();

  TowerPtr tower_;
  std::vector<FieldElem> c_;
};

}  // namespace linhull
