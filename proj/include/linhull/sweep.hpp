// SPDX-License-Identifier: Apache-2.0
//
// Hull strata over P^1 of the base or top field.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "linhull/field.hpp"
#include "linhull/frob.hpp"
#include "linhull/linops.hpp"

namespace linhull {

enum class ParamField { Base, Top };

std::string_view to_string(ParamField f) noexcept;

/// Either the twist X^(q^k) or an arbitrary L.
struct Family {
  std::optional<std::uint32_t> k;
  std::optional<QPoly> L;

  static Family frobenius(std::uint32_t k) { return {k, std::nullopt}; }
  static Family general(QPoly L) { return {std::nullopt, std::move(L)}; }
};

struct PointRecord {
  /// format(rho) for (rho:1), "inf" for (1:0).
  std::string key;
  FieldElem lambda{}, mu{};
  std::size_t hull_dim = 0;
  std::size_t rank_operator = 0;
  std::optional<std::size_t> rank_gram;
  std::optional<EpsIndicators> eps;
  std::optional<bool> isotropic;
  bool bijective = true;
  bool case_consistent = true;
};

struct StrataTable {
  std::uint32_t p = 2, r = 1, m = 1;
  std::optional<std::uint32_t> k;
  ParamField field = ParamField::Base;
  std::map<std::size_t, std::uint64_t> counts;
  std::uint64_t total = 0;
  double lcd_density = 0.0;
  std::vector<PointRecord> records;
};

/// Points (1:0) then (rho:1) in enumeration order. Frobenius families use the
/// explicit intersection of im phi and ker phi^dagger; a general L uses the
/// Gram route for base-field parameters and the adjoint route otherwise.
/// Throws SizeCapExceeded when the parameter field exceeds `cap`.
StrataTable sweep_p1(const TowerPtr& tower, const Family& family, ParamField field,
                     std::uint64_t cap = kDefaultSizeCap, bool keep_records = true);

/// delta -> N_delta over nonzero affine pairs of the parameter field, counted
/// pair by pair. Throws SizeCapExceeded when the number of pairs exceeds cap.
std::map<std::size_t, std::uint64_t> spectrum_affine(const TowerPtr& tower, std::uint32_t k, ParamField field,
                                                     std::uint64_t cap = kDefaultSizeCap);

struct EbitStratum {
  std::size_t hull_dim = 0;
  std::uint64_t codes = 0;
  std::size_t ebits = 0;
  /// "0", "d", "2d" or "other" relative to gcd(k, m), Frobenius families only.
  std::string label;
  /// (eps1,eps2) cases seen, e.g. "(1,1)".
  std::set<std::string> cases;
};

struct EbitReport {
  std::vector<EbitStratum> strata;
  double zero_cost_fraction = 0.0;
  std::optional<std::uint32_t> d;
};

EbitReport ebit_report(const StrataTable& table);

}  // namespace linhull
