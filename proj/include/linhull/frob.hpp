// SPDX-License-Identifier: Apache-2.0
//
// The Frobenius-twist family phi = lambda X + mu X^(q^k) over GF(q^m).
#pragma once

#include <optional>
#include <vector>

#include "linhull/field.hpp"
#include "linhull/linops.hpp"
#include "linhull/matrix.hpp"

namespace linhull {

struct FrobParams {
  TowerPtr tower;
  std::uint32_t k = 1;
  std::uint32_t d = 1;
  FieldElem lambda{};
  FieldElem mu{};

  /// Throws InvalidArgument unless 1 <= k <= m-1, DegenerateInput for (0, 0).
  static FrobParams make(TowerPtr tower, std::uint32_t k, FieldElem lambda, FieldElem mu);
  QPoly phi() const;
};

struct KernelInfo {
  std::size_t dim = 0;
  /// x0 with ker = F_{q^d} x0 when dim > 0.
  std::optional<FieldElem> generator;
  std::vector<FieldElem> fq_basis;
};

/// From the norm criterion; the F_q-basis is computed directly and must agree.
KernelInfo frob_kernel_dim(const FrobParams& params);

struct EpsIndicators {
  bool eps1 = false;
  bool eps2 = false;
};

/// Closed-form indicators, verified against kernels of phi and its adjoint
/// (Mismatch on disagreement). For mu = 0 both are false.
EpsIndicators eps_indicators(const FrobParams& params);

/// lambda y + mu^(q^(m-k)) y^(q^(m-k)).
QPoly frob_adjoint(const FrobParams& params);

struct FrobHullReport {
  EpsIndicators eps;
  std::size_t dim_code = 0;
  std::size_t hull_dim = 0;
  std::uint32_t d = 1;
  /// The case table's prediction holds (for (1,1): 0 <= delta <= d and
  /// delta = d exactly when the kernel line of the adjoint is isotropic).
  bool case_consistent = true;
  /// Populated in case (1,1).
  std::optional<std::size_t> delta;
  std::optional<bool> isotropic;
  std::optional<FieldElem> x0;
  std::size_t rank_operator = 0;
};

FrobHullReport hull_frob(const FrobParams& params);

/// Tr_{q^m/q^d}(x0^2) == 0. Throws DegenerateInput for x0 = 0, NotADivisor.
bool isotropy_check(const TowerPtr& tower, FieldElem x0, std::uint32_t d);

struct Circulant {
  std::vector<FieldElem> omega;
  Matrix G0, G1, G2;
};

/// omega_j = Tr(beta^(1+q^j)); G0 = circ(omega), G1 row from shifted omegas,
/// G2 = G0. Throws NotNormalBasis.
Circulant circulant_structure(const TowerPtr& tower, std::uint32_t k, const Basis& normal_basis);
Matrix circulant(const TowerPtr& tower, const std::vector<FieldElem>& first_row);

/// #{t < m : kt = j or kt = -j (mod m)}.
std::size_t frequency_multiplicity(std::uint32_t k, std::uint32_t m, std::uint32_t j);

/// nu(rho0) from the multiplicative order of -rho0 (no roots of unity are
/// constructed). Throws NotApplicable when gcd(m, p) != 1, InvalidArgument
/// when rho0 is outside F_q.
std::size_t frequency_multiplicity_at(const TowerPtr& tower, std::uint32_t k, FieldElem rho0);

/// Hull at a bijective root rho0 in F_q of the discriminant, equal to
/// nu(rho0). Throws NotApplicable (gcd(m, p) != 1), PreconditionFailed
/// (not a root, or phi_{rho0,1} not bijective), Mismatch when the direct
/// hull disagrees.
std::size_t stratum_hull_at_root(const TowerPtr& tower, std::uint32_t k, FieldElem rho0);

}  // namespace linhull
