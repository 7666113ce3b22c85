// SPDX-License-Identifier: Apache-2.0
#include "linhull/rdhull.hpp"

#include "linhull/error.hpp"

namespace linhull {

std::vector<QPoly> RdCode::all_generators() const {
  std::vector<QPoly> out{QPoly::identity(tower)};
  out.insert(out.end(), generators.begin(), generators.end());
  return out;
}

RdCode make_rd_code(TowerPtr tower, std::vector<QPoly> generators) {
  if (!tower) raise(ErrorCode::InvalidArgument, "null tower");
  for (const auto& g : generators) {
    require_same_tower(g.tower(), tower);
    if (g[0].packed != 0) raise(ErrorCode::InvalidArgument, "generators must have zero X coefficient");
  }
  RdCode code{std::move(tower), std::move(generators), false};
  std::vector<std::vector<FieldElem>> rows;
  for (const auto& g : code.all_generators()) rows.push_back(g.coeffs());
  code.independent = Matrix::from_rows(code.tower, rows).rank() == rows.size();
  return code;
}

FieldElem delsarte_pair(const QPoly& f, const QPoly& g) {
  require_same_tower(f.tower(), g.tower());
  const FieldTower& t = *f.tower();
  FieldElem acc = t.zero();
  for (std::size_t l = 0; l < f.coeffs().size(); ++l) acc = t.add(acc, t.mul(f[l], g[l]));
  return acc;
}

Matrix generator_gram(const RdCode& code) {
  if (!code.independent) raise(ErrorCode::DependentGenerators, "X, F_1, ..., F_k are dependent over GF(q^m)");
  const std::size_t k = code.generators.size();
  Matrix M(code.tower, k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) M(i, j) = delsarte_pair(code.generators[i], code.generators[j]);
  return M;
}

RdHullReport rd_hull(const RdCode& code) {
  RdHullReport r;
  r.M = generator_gram(code);
  r.k = code.generators.size();
  r.rank_M = r.M.rank();
  r.hull_dim = r.k - r.rank_M;
  r.is_lcd = r.hull_dim == 0;
  r.generators_self_orthogonal = r.M.is_zero();
  r.ambient_dimension_warning = r.k > 0 && r.generators_self_orthogonal;
  const FieldTower& t = *code.tower;
  for (auto v : r.M.kernel()) {
    std::size_t lead = 0;
    while (v[lead].packed == 0) ++lead;
    const FieldElem s = t.inv(v[lead]);
    QPoly h = QPoly::zero(code.tower);
    for (std::size_t j = 0; j < r.k; ++j) h = h + code.generators[j].scaled(t.mul(s, v[j]));
    r.hull_basis.push_back(std::move(h));
  }
  return r;
}

DegeneracyReport is_degenerate(const TowerPtr& tower, const std::vector<QPoly>& generators) {
  const Basis& cb = coordinate_basis(tower);
  const std::size_t m = tower->m();
  Matrix stacked(tower, 0, m);
  for (const auto& g : generators) stacked = stacked.stack(op_matrix(g, cb));
  DegeneracyReport r;
  if (generators.empty()) {
    r.common_kernel.assign(cb.elements().begin(), cb.elements().end());
  } else {
    for (const auto& v : stacked.kernel()) r.common_kernel.push_back(cb.combine(v));
  }
  r.degenerate = !r.common_kernel.empty();
  return r;
}

DegeneracyReport is_degenerate(const RdCode& code) { return is_degenerate(code.tower, code.all_generators()); }

}  // namespace linhull
