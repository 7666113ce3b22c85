// SPDX-License-Identifier: Apache-2.0
#include "linhull/gram.hpp"

#include "linhull/error.hpp"
#include "linhull/numtheory.hpp"
#include "linhull/subspace.hpp"

namespace linhull {

std::string_view to_string(HullClass c) noexcept {
  switch (c) {
    case HullClass::LCD: return "LCD";
    case HullClass::SelfOrthogonal: return "self-orthogonal";
    case HullClass::Intermediate: return "intermediate";
  }
  return "unknown";
}

namespace {

Matrix pairing_matrix(const std::vector<FieldElem>& u, const std::vector<FieldElem>& v, const TowerPtr& tower) {
  const FieldTower& t = *tower;
  Matrix g(tower, u.size(), v.size());
  for (std::size_t s = 0; s < u.size(); ++s)
    for (std::size_t r = 0; r < v.size(); ++r) g(s, r) = t.trace(t.mul(u[s], v[r]));
  return g;
}

std::vector<FieldElem> images(const QPoly& phi, const Basis& basis) {
  std::vector<FieldElem> out;
  for (auto e : basis.elements()) out.push_back(phi.eval(e));
  return out;
}

}  // namespace

Matrix gram_of_operator(const QPoly& phi, const Basis& basis) {
  require_same_tower(phi.tower(), basis.tower());
  const auto im = images(phi, basis);
  return pairing_matrix(im, im, phi.tower());
}

StructureMatrices structure_matrices(const std::vector<QPoly>& F, const Basis& basis) {
  std::vector<std::vector<FieldElem>> im;
  for (const auto& f : F) {
    require_same_tower(f.tower(), basis.tower());
    im.push_back(images(f, basis));
  }
  StructureMatrices gamma(F.size());
  for (std::size_t i = 0; i < F.size(); ++i)
    for (std::size_t j = 0; j < F.size(); ++j) gamma[i].push_back(pairing_matrix(im[i], im[j], basis.tower()));
  return gamma;
}

Matrix combine_structure(const StructureMatrices& gamma, const std::vector<FieldElem>& alpha) {
  if (gamma.empty()) raise(ErrorCode::InvalidArgument, "empty structure matrices");
  if (alpha.size() != gamma.size()) raise(ErrorCode::InvalidArgument, "parameter length does not match generators");
  const TowerPtr& tower = gamma[0][0].tower();
  const FieldTower& t = *tower;
  Matrix acc(tower, gamma[0][0].rows(), gamma[0][0].cols());
  for (std::size_t i = 0; i < gamma.size(); ++i)
    for (std::size_t j = 0; j < gamma.size(); ++j) {
      const FieldElem c = t.mul(alpha[i], alpha[j]);
      if (c.packed != 0) acc = acc + gamma[i][j].scaled(c);
    }
  return acc;
}

HullReport classify(std::size_t rank_operator, std::size_t rank_gram) {
  if (rank_gram > rank_operator) raise(ErrorCode::Mismatch, "Gram rank exceeds operator rank");
  HullReport r;
  r.rank_operator = rank_operator;
  r.rank_gram = rank_gram;
  r.hull_dim = rank_operator - rank_gram;
  r.ebits = r.hull_dim;
  if (r.hull_dim == 0)
    r.classification = HullClass::LCD;
  else if (rank_gram == 0)
    r.classification = HullClass::SelfOrthogonal;
  else
    r.classification = HullClass::Intermediate;
  return r;
}

HullReport hull_dim(const QPoly& phi, const Basis& basis) {
  if (phi.is_zero()) raise(ErrorCode::DegenerateInput, "the zero operator has no hull classification");
  const std::size_t rk = op_matrix(phi, basis).rank();
  return classify(rk, gram_of_operator(phi, basis).rank());
}

std::size_t hull_via_adjoint(const QPoly& phi) {
  const TowerPtr& tower = phi.tower();
  const SubspaceFq im = SubspaceFq::span(tower, op_image_basis(phi));
  const SubspaceFq ker = SubspaceFq::span(tower, op_kernel_basis(qpoly_adjoint(phi)));
  return intersect(im, ker).dim();
}

std::vector<std::vector<FieldElem>> universal_null_space(const StructureMatrices& gamma) {
  if (gamma.empty()) raise(ErrorCode::InvalidArgument, "empty structure matrices");
  Matrix stacked = gamma[0][0];
  for (std::size_t i = 0; i < gamma.size(); ++i)
    for (std::size_t j = 0; j < gamma.size(); ++j)
      if (i || j) stacked = stacked.stack(gamma[i][j]);
  return stacked.kernel();
}

QPoly combine_operators(const std::vector<QPoly>& F, const std::vector<FieldElem>& alpha) {
  if (F.empty() || alpha.size() != F.size()) raise(ErrorCode::InvalidArgument, "parameter length does not match generators");
  QPoly acc = QPoly::zero(F[0].tower());
  for (std::size_t i = 0; i < F.size(); ++i) acc = acc + F[i].scaled(alpha[i]);
  return acc;
}

std::vector<FieldElem> canonical_orbit_rep(const TowerPtr& tower, const std::vector<FieldElem>& alpha,
                                           const Basis& basis) {
  const FieldTower& t = *tower;
  std::size_t lead = alpha.size();
  for (std::size_t i = 0; i < alpha.size(); ++i)
    if (alpha[i].packed != 0) {
      lead = i;
      break;
    }
  if (lead == alpha.size()) raise(ErrorCode::DegenerateInput, "the zero vector has no orbit");
  const auto key = [&](FieldElem x) {
    std::vector<std::size_t> k;
    for (auto c : basis.coords(x)) k.push_back(t.base_index(c));
    return k;
  };
  FieldElem best_t = t.one();
  auto best = key(alpha[lead]);
  for (auto s : t.base_elements()) {
    if (s.packed == 0) continue;
    auto k = key(t.mul(s, alpha[lead]));
    if (k < best) {
      best = std::move(k);
      best_t = s;
    }
  }
  std::vector<FieldElem> out(alpha);
  for (auto& x : out) x = t.mul(best_t, x);
  return out;
}

std::map<std::size_t, std::uint64_t> orbit_strata(const std::vector<QPoly>& F, const Basis& basis,
                                                  std::uint64_t cap) {
  if (F.empty()) raise(ErrorCode::InvalidArgument, "no generators");
  const TowerPtr& tower = F[0].tower();
  const FieldTower& t = *tower;
  const auto total = checked_pow(t.size(), F.size());
  if (!total || *total > cap) raise(ErrorCode::SizeCapExceeded, "orbit space exceeds the configured cap");
  std::map<std::size_t, std::uint64_t> counts;
  std::vector<FieldElem> alpha(F.size());
  for (std::uint64_t idx = 1; idx < *total; ++idx) {
    std::uint64_t v = idx;
    for (auto& a : alpha) {
      a = t.element(v % t.size());
      v /= t.size();
    }
    if (canonical_orbit_rep(tower, alpha, basis) != alpha) continue;
    const QPoly phi = combine_operators(F, alpha);
    if (phi.is_zero()) {
      ++counts[0];
      continue;
    }
    ++counts[hull_dim(phi, basis).hull_dim];
  }
  return counts;
}

}  // namespace linhull
