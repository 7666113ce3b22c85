// SPDX-License-Identifier: Apache-2.0
#include "linhull/oracle.hpp"

#include <cmath>
#include <set>

#include "linhull/error.hpp"

namespace linhull {
namespace {

void require_cap(const FieldTower& t, std::uint64_t cap) {
  if (t.size() > cap) raise(ErrorCode::SizeCapExceeded, "field too large for the brute-force oracle");
}

}  // namespace

SubspaceFq trace_dual(const SubspaceFq& S) {
  const TowerPtr& tower = S.tower();
  const FieldTower& t = *tower;
  require_cap(t, kOracleCap);
  const Basis& cb = coordinate_basis(tower);
  const std::size_t m = t.m();
  if (S.dim() == 0) return SubspaceFq::full(tower);
  Matrix sys(tower, S.dim(), m);
  for (std::size_t i = 0; i < S.dim(); ++i)
    for (std::size_t j = 0; j < m; ++j) sys(i, j) = t.trace(t.mul(S.basis()[i], cb[j]));
  std::vector<FieldElem> out;
  for (const auto& v : sys.kernel()) out.push_back(cb.combine(v));
  return SubspaceFq::span(tower, out);
}

std::size_t hull_by_definition(const SubspaceFq& S) { return intersect(S, trace_dual(S)).dim(); }

std::size_t hull_by_definition(const QPoly& phi) {
  return hull_by_definition(SubspaceFq::span(phi.tower(), op_image_basis(phi)));
}

std::size_t hull_by_enumeration(const SubspaceFq& S) {
  const TowerPtr& tower = S.tower();
  const FieldTower& t = *tower;
  require_cap(t, kEnumerationCap);
  const auto& fq = t.base_elements();
  std::set<FieldElem> members{t.zero()};
  for (auto b : S.basis()) {
    std::set<FieldElem> next;
    for (auto x : members)
      for (auto c : fq) next.insert(t.add(x, t.mul(c, b)));
    members = std::move(next);
  }
  std::size_t count = 0;
  for (auto y : members) {
    bool orth = true;
    for (auto x : members)
      if (t.trace(t.mul(x, y)).packed != 0) {
        orth = false;
        break;
      }
    count += orth;
  }
  std::size_t dim = 0;
  for (std::uint64_t c = 1; c < count; c *= t.q()) ++dim;
  return dim;
}

bool line_isotropic_by_enumeration(const TowerPtr& tower, FieldElem x0, std::uint32_t d) {
  const FieldTower& t = *tower;
  const auto sub = t.subfield(d);
  for (auto a : sub)
    for (auto b : sub)
      if (t.trace(t.mul(t.mul(a, x0), t.mul(b, x0))).packed != 0) return false;
  return true;
}

std::size_t rd_hull_by_definition(const std::vector<QPoly>& generators) {
  if (generators.empty()) return 0;
  const TowerPtr& tower = generators[0].tower();
  std::vector<std::vector<FieldElem>> rows;
  for (const auto& g : generators) {
    require_same_tower(g.tower(), tower);
    rows.push_back(g.coeffs());
  }
  const Matrix A = Matrix::from_rows(tower, rows);
  if (A.rank() != rows.size()) raise(ErrorCode::DependentGenerators, "generators are dependent over GF(q^m)");
  const auto dual = A.kernel();
  if (dual.empty()) return 0;
  // sum c_i row_i - sum d_j dual_j = 0, unknowns (c, d).
  const Matrix D = Matrix::from_rows(tower, dual).scaled(tower->neg(tower->one()));
  const Matrix sys = A.stack(D).transpose();
  const auto sol = sys.kernel();
  std::vector<std::vector<FieldElem>> vecs;
  const FieldTower& t = *tower;
  for (const auto& s : sol) {
    std::vector<FieldElem> v(A.cols(), t.zero());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < A.cols(); ++j) v[j] = t.add(v[j], t.mul(s[i], A(i, j)));
    vecs.push_back(std::move(v));
  }
  if (vecs.empty()) return 0;
  return Matrix::from_rows(tower, vecs).rank();
}

}  // namespace linhull
