// SPDX-License-Identifier: Apache-2.0
#include "linhull/pencil.hpp"

#include "linhull/error.hpp"
#include "linhull/gram.hpp"
#include "linhull/numtheory.hpp"

namespace linhull {
namespace {

Matrix cross_gram(const QPoly& L, const Basis& basis) {
  const TowerPtr& tower = L.tower();
  const FieldTower& t = *tower;
  const std::size_t m = t.m();
  std::vector<FieldElem> im;
  for (auto e : basis.elements()) im.push_back(L.eval(e));
  Matrix g(tower, m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      g(i, j) = t.add(t.trace(t.mul(basis[i], im[j])), t.trace(t.mul(im[i], basis[j])));
  return g;
}

Matrix quadratic_at(const Matrix& G0, const Matrix& G1, const Matrix& G2, FieldElem a, FieldElem b) {
  const FieldTower& t = *G0.tower();
  return G0.scaled(t.mul(a, a)) + G1.scaled(t.mul(a, b)) + G2.scaled(t.mul(b, b));
}

// F_q inside one Conway tower maps to F_q inside another by matching powers
// of the two base generators, both roots of the same Conway polynomial.
FieldElem transport_base(const FieldTower& from, const FieldTower& to, FieldElem x) {
  if (x.packed == 0) return to.zero();
  const std::uint64_t j = from.log(x) / (from.order() / (from.q() - 1));
  return to.pow(to.base_generator(), j);
}

Matrix transport(const Matrix& a, const TowerPtr& to) {
  Matrix out(to, a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = transport_base(*a.tower(), *to, a(i, j));
  return out;
}

UniPoly interpolate_det(const Matrix& G0, const Matrix& G1, const Matrix& G2, const std::vector<FieldElem>& nodes) {
  const TowerPtr& tower = G0.tower();
  const FieldTower& t = *tower;
  std::vector<FieldElem> vals;
  for (auto x : nodes) vals.push_back(quadratic_at(G0, G1, G2, x, t.one()).det());
  UniPoly d = UniPoly::interpolate(tower, nodes, vals);
  for (auto c : d.coeffs())
    if (!t.in_base_field(c)) raise(ErrorCode::Mismatch, "interpolated discriminant left the base field");
  return d;
}

}  // namespace

PencilData build_pencil(const QPoly& L, const Basis& basis) {
  require_same_tower(L.tower(), basis.tower());
  PencilData p{L.tower(), basis, L, {}, {}, {}, {}};
  p.G0 = gram_of_operator(QPoly::identity(L.tower()), basis);
  p.G1 = cross_gram(L, basis);
  p.G2 = gram_of_operator(L, basis);
  p.disc = discriminant_poly(p);
  return p;
}

Matrix gram_at(const PencilData& pencil, FieldElem lambda, FieldElem mu) {
  const FieldTower& t = *pencil.tower;
  if (lambda.packed == 0 && mu.packed == 0) raise(ErrorCode::DegenerateInput, "(lambda, mu) = (0, 0)");
  if (!t.in_base_field(lambda) || !t.in_base_field(mu))
    raise(ErrorCode::InvalidArgument, "the pencil formula holds for parameters in GF(q) only");
  return quadratic_at(pencil.G0, pencil.G1, pencil.G2, lambda, mu);
}

Matrix monic_pencil_at(const PencilData& pencil, FieldElem rho) {
  return quadratic_at(pencil.G0, pencil.G1, pencil.G2, rho, pencil.tower->one());
}

Discriminant discriminant_poly(const PencilData& pencil) {
  const TowerPtr& tower = pencil.tower;
  const FieldTower& t = *tower;
  const std::uint64_t need = 2 * std::uint64_t{t.m()} + 1;
  Discriminant out;
  bool done = false;
  for (auto s64 : divisors(t.m())) {
    const auto s = static_cast<std::uint32_t>(s64);
    const auto size = checked_pow(t.q(), s);
    if (!size || *size < need) continue;
    auto sub = t.subfield(s);
    sub.resize(need);
    out.delta = interpolate_det(pencil.G0, pencil.G1, pencil.G2, sub);
    out.node_field_degree = s;
    done = true;
    break;
  }
  if (!done) {
    std::uint32_t e = 1;
    while (*checked_pow(t.q(), e) < need) ++e;
    const TowerPtr aux = FieldTower::build(t.p(), t.r(), e);
    auto nodes = aux->elements();
    nodes.resize(need);
    const UniPoly d = interpolate_det(transport(pencil.G0, aux), transport(pencil.G1, aux),
                                      transport(pencil.G2, aux), nodes);
    std::vector<FieldElem> back;
    for (auto c : d.coeffs()) back.push_back(transport_base(*aux, t, c));
    out.delta = UniPoly(tower, back);
    out.node_field_degree = e;
    out.auxiliary_nodes = true;
  }
  if (out.delta.tower() == nullptr) out.delta = UniPoly(tower, {});
  for (auto rho : t.base_elements())
    if (out.delta.eval(rho).packed == 0) out.roots.push_back(rho);
  return out;
}

bool is_self_adjoint(const QPoly& L) { return qpoly_adjoint(L) == L; }

Char2Reduction char2_reduction(const PencilData& pencil) {
  const FieldTower& t = *pencil.tower;
  if (t.p() != 2) raise(ErrorCode::NotApplicable, "characteristic is not two");
  if (!is_self_adjoint(pencil.L)) raise(ErrorCode::NotApplicable, "L is not self-adjoint");
  if (!pencil.G1.is_zero()) raise(ErrorCode::Mismatch, "G1 does not vanish for a self-adjoint L in characteristic two");
  std::vector<FieldElem> half;
  const auto& c = pencil.disc.delta.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i % 2 == 1) {
      if (c[i].packed != 0) raise(ErrorCode::Mismatch, "discriminant has an odd-degree term");
      continue;
    }
    half.push_back(c[i]);
  }
  return {pencil.G0, pencil.G2, UniPoly(pencil.tower, half)};
}

}  // namespace linhull
