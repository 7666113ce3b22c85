// SPDX-License-Identifier: Apache-2.0
#include "linhull/frob.hpp"

#include <numeric>

#include "linhull/error.hpp"
#include "linhull/gram.hpp"
#include "linhull/subspace.hpp"

namespace linhull {
namespace {

std::uint64_t norm_exponent(const FieldTower& t, std::uint32_t d) {
  std::uint64_t qd = 1;
  for (std::uint32_t i = 0; i < d; ++i) qd *= t.q();
  return t.order() / (qd - 1);
}

}  // namespace

FrobParams FrobParams::make(TowerPtr tower, std::uint32_t k, FieldElem lambda, FieldElem mu) {
  if (!tower) raise(ErrorCode::InvalidArgument, "null tower");
  const std::uint32_t m = tower->m();
  if (k < 1 || k >= m) raise(ErrorCode::InvalidArgument, "twist exponent k must satisfy 1 <= k <= m-1");
  if (lambda.packed == 0 && mu.packed == 0) raise(ErrorCode::DegenerateInput, "(lambda, mu) = (0, 0)");
  return FrobParams{std::move(tower), k, std::gcd(k, m), lambda, mu};
}

QPoly FrobParams::phi() const {
  return QPoly::monomial(tower, 0, lambda) + QPoly::monomial(tower, k, mu);
}

KernelInfo frob_kernel_dim(const FrobParams& params) {
  const FieldTower& t = *params.tower;
  if (params.lambda.packed == 0 && params.mu.packed == 0) raise(ErrorCode::DegenerateInput, "(lambda, mu) = (0, 0)");
  KernelInfo info;
  std::size_t predicted = 0;
  if (params.mu.packed != 0) {
    const FieldElem minus_rho = t.neg(t.div(params.lambda, params.mu));
    if (t.pow(minus_rho, norm_exponent(t, params.d)) == t.one()) predicted = params.d;
  }
  info.fq_basis = op_kernel_basis(params.phi());
  info.dim = info.fq_basis.size();
  if (info.dim != predicted) raise(ErrorCode::Mismatch, "kernel dimension disagrees with the norm criterion");
  if (info.dim) info.generator = info.fq_basis.front();
  return info;
}

QPoly frob_adjoint(const FrobParams& params) {
  const FieldTower& t = *params.tower;
  const std::uint32_t e = t.m() - params.k;
  return QPoly::monomial(params.tower, 0, params.lambda) +
         QPoly::monomial(params.tower, e, t.frobenius_pow(params.mu, e));
}

EpsIndicators eps_indicators(const FrobParams& params) {
  const FieldTower& t = *params.tower;
  if (params.lambda.packed == 0 && params.mu.packed == 0) raise(ErrorCode::DegenerateInput, "(lambda, mu) = (0, 0)");
  EpsIndicators eps;
  if (params.mu.packed != 0) {
    const std::uint64_t N = norm_exponent(t, params.d);
    const FieldElem rho = t.div(params.lambda, params.mu);
    eps.eps1 = t.pow(t.neg(rho), N) == t.one();
    const std::uint32_t e = t.m() - params.k;
    const FieldElem mu_twist = t.div(t.frobenius_pow(params.mu, e), params.mu);  // mu^(q^(m-k)-1)
    eps.eps2 = t.pow(t.neg(t.mul(mu_twist, rho)), N) == t.one();
  }
  const bool direct1 = op_rank(params.phi()) < t.m();
  const bool direct2 = op_rank(frob_adjoint(params)) < t.m();
  if (eps.eps1 != direct1 || eps.eps2 != direct2)
    raise(ErrorCode::Mismatch, "indicator formula disagrees with the kernels of phi and its adjoint");
  return eps;
}

bool isotropy_check(const TowerPtr& tower, FieldElem x0, std::uint32_t d) {
  if (x0.packed == 0) raise(ErrorCode::DegenerateInput, "x0 must be nonzero");
  return tower->trace_rel(tower->mul(x0, x0), d).packed == 0;
}

FrobHullReport hull_frob(const FrobParams& params) {
  const TowerPtr& tower = params.tower;
  const std::uint32_t m = tower->m(), d = params.d;
  FrobHullReport r;
  r.d = d;
  r.eps = eps_indicators(params);
  const QPoly phi = params.phi();
  const QPoly adj = frob_adjoint(params);
  const auto im_basis = op_image_basis(phi);
  const auto adj_kernel = op_kernel_basis(adj);
  r.rank_operator = im_basis.size();
  r.dim_code = m - (r.eps.eps1 ? d : 0);
  r.hull_dim = intersect(SubspaceFq::span(tower, im_basis), SubspaceFq::span(tower, adj_kernel)).dim();
  bool ok = r.rank_operator == r.dim_code;
  if (!r.eps.eps1 && !r.eps.eps2) ok = ok && r.hull_dim == 0;
  if (!r.eps.eps1 && r.eps.eps2) ok = ok && r.hull_dim == d;
  if (r.eps.eps1 && !r.eps.eps2) ok = ok && r.hull_dim == 0;
  if (r.eps.eps2) {
    r.x0 = adj_kernel.front();
    r.isotropic = isotropy_check(tower, *r.x0, d);
  }
  if (r.eps.eps1 && r.eps.eps2) {
    r.delta = r.hull_dim;
    ok = ok && r.hull_dim <= d && ((r.hull_dim == d) == *r.isotropic);
  }
  r.case_consistent = ok;
  return r;
}

Matrix circulant(const TowerPtr& tower, const std::vector<FieldElem>& row) {
  const std::size_t m = row.size();
  Matrix c(tower, m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) c(i, j) = row[(j + m - i) % m];
  return c;
}

Circulant circulant_structure(const TowerPtr& tower, std::uint32_t k, const Basis& normal_basis) {
  require_same_tower(tower, normal_basis.tower());
  if (!normal_basis.is_normal()) raise(ErrorCode::NotNormalBasis, "basis is not normal");
  const FieldTower& t = *tower;
  const std::uint32_t m = t.m();
  const FieldElem beta = *normal_basis.normal_element();
  Circulant c;
  for (std::uint32_t j = 0; j < m; ++j) c.omega.push_back(t.trace(t.mul(beta, t.frobenius_pow(beta, j))));
  std::vector<FieldElem> row1;
  for (std::uint32_t j = 0; j < m; ++j)
    row1.push_back(t.add(c.omega[(j + k) % m], c.omega[(k + m - j % m) % m]));
  c.G0 = circulant(tower, c.omega);
  c.G1 = circulant(tower, row1);
  c.G2 = c.G0;
  return c;
}

std::size_t frequency_multiplicity(std::uint32_t k, std::uint32_t m, std::uint32_t j) {
  std::size_t count = 0;
  const std::uint64_t jm = j % m, neg = (m - jm) % m;
  for (std::uint32_t t = 0; t < m; ++t) {
    const std::uint64_t kt = (std::uint64_t{k} * t) % m;
    if (kt == jm || kt == neg) ++count;
  }
  return count;
}

std::size_t frequency_multiplicity_at(const TowerPtr& tower, std::uint32_t k, FieldElem rho0) {
  const FieldTower& t = *tower;
  if (t.m() % t.p() == 0) raise(ErrorCode::NotApplicable, "gcd(m, char) != 1");
  if (!t.in_base_field(rho0)) raise(ErrorCode::InvalidArgument, "rho0 must lie in GF(q)");
  if (rho0.packed == 0) return 0;
  const std::uint64_t ord = t.multiplicative_order(t.neg(rho0));
  if (t.m() % ord != 0) return 0;
  return frequency_multiplicity(k, t.m(), static_cast<std::uint32_t>((t.m() / ord) % t.m()));
}

std::size_t stratum_hull_at_root(const TowerPtr& tower, std::uint32_t k, FieldElem rho0) {
  const FieldTower& t = *tower;
  if (t.m() % t.p() == 0) raise(ErrorCode::NotApplicable, "gcd(m, char) != 1");
  if (!t.in_base_field(rho0)) raise(ErrorCode::InvalidArgument, "rho0 must lie in GF(q)");
  const FrobParams params = FrobParams::make(tower, k, rho0, t.one());
  const Basis& basis = coordinate_basis(tower);
  const QPoly phi = params.phi();
  const QPoly L = QPoly::frobenius(tower, k);
  const Matrix G0 = gram_of_operator(QPoly::identity(tower), basis);
  const Matrix G2 = gram_of_operator(L, basis);
  Matrix G1(tower, t.m(), t.m());
  for (std::size_t i = 0; i < t.m(); ++i)
    for (std::size_t j = 0; j < t.m(); ++j)
      G1(i, j) = t.add(t.trace(t.mul(basis[i], L.eval(basis[j]))), t.trace(t.mul(L.eval(basis[i]), basis[j])));
  const Matrix G = G0.scaled(t.mul(rho0, rho0)) + G1.scaled(rho0) + G2;
  if (G.det().packed != 0) raise(ErrorCode::PreconditionFailed, "rho0 is not a root of the discriminant");
  if (op_rank(phi) < t.m()) raise(ErrorCode::PreconditionFailed, "phi_{rho0,1} is not bijective");
  const std::size_t nu = frequency_multiplicity_at(tower, k, rho0);
  const std::size_t nullity = t.m() - G.rank();
  const std::size_t hull = hull_dim(phi, basis).hull_dim;
  if (nu != nullity || nu != hull) raise(ErrorCode::Mismatch, "frequency multiplicity disagrees with the direct hull");
  return nu;
}

}  // namespace linhull
