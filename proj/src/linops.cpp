// SPDX-License-Identifier: Apache-2.0
#include "linhull/linops.hpp"

#include <cassert>
#include <map>
#include <mutex>
#include <random>
#include <utility>

#include "linhull/error.hpp"

namespace linhull {

QPoly::QPoly(TowerPtr tower, std::vector<FieldElem> coeffs) : tower_(std::move(tower)) {
  if (!tower_) raise(ErrorCode::InvalidArgument, "null tower");
  const std::uint32_t m = tower_->m();
  a_.assign(m, FieldElem{});
  for (std::size_t i = 0; i < coeffs.size(); ++i) a_[i % m] = tower_->add(a_[i % m], coeffs[i]);
}

QPoly QPoly::zero(TowerPtr tower) { return QPoly(std::move(tower), {}); }

QPoly QPoly::identity(TowerPtr tower) { return monomial(std::move(tower), 0, FieldElem{1}); }

QPoly QPoly::monomial(TowerPtr tower, std::uint32_t e, FieldElem c) {
  const std::uint32_t m = tower->m();
  std::vector<FieldElem> a(m, FieldElem{});
  a[e % m] = c;
  return QPoly(std::move(tower), std::move(a));
}

QPoly QPoly::frobenius(TowerPtr tower, std::uint32_t e) { return monomial(std::move(tower), e, FieldElem{1}); }

bool QPoly::is_zero() const noexcept {
  for (auto c : a_)
    if (c.packed != 0) return false;
  return true;
}

FieldElem QPoly::eval(FieldElem x) const {
  const FieldTower& t = *tower_;
  FieldElem acc = t.zero();
  FieldElem xi = x;
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (a_[i].packed != 0) acc = t.add(acc, t.mul(a_[i], xi));
    xi = t.frobenius_pow(xi, 1);
  }
  return acc;
}

QPoly QPoly::operator+(const QPoly& o) const {
  require_same_tower(tower_, o.tower_);
  std::vector<FieldElem> out(a_.size());
  for (std::size_t i = 0; i < a_.size(); ++i) out[i] = tower_->add(a_[i], o.a_[i]);
  return QPoly(tower_, std::move(out));
}

QPoly QPoly::scaled(FieldElem c) const {
  std::vector<FieldElem> out(a_);
  for (auto& x : out) x = tower_->mul(c, x);
  return QPoly(tower_, std::move(out));
}

FieldElem qpoly_eval(const QPoly& L, FieldElem x) { return L.eval(x); }

QPoly qpoly_compose(const QPoly& L1, const QPoly& L2) {
  require_same_tower(L1.tower(), L2.tower());
  const FieldTower& t = *L1.tower();
  const std::uint32_t m = t.m();
  std::vector<FieldElem> out(m, FieldElem{});
  for (std::uint32_t i = 0; i < m; ++i) {
    if (L1[i].packed == 0) continue;
    for (std::uint32_t j = 0; j < m; ++j) {
      if (L2[j].packed == 0) continue;
      const FieldElem c = t.mul(L1[i], t.frobenius_pow(L2[j], i));
      out[(i + j) % m] = t.add(out[(i + j) % m], c);
    }
  }
  return QPoly(L1.tower(), std::move(out));
}

QPoly qpoly_adjoint(const QPoly& L) {
  const FieldTower& t = *L.tower();
  const std::uint32_t m = t.m();
  std::vector<FieldElem> out(m, FieldElem{});
  for (std::uint32_t i = 0; i < m; ++i) {
    const std::uint32_t j = (m - i) % m;
    out[j] = t.frobenius_pow(L[i], j);
  }
  return QPoly(L.tower(), std::move(out));
}

QPoly pencil_member(FieldElem lambda, FieldElem mu, const QPoly& L) {
  return QPoly::identity(L.tower()).scaled(lambda) + L.scaled(mu);
}

Matrix op_matrix(const QPoly& L, const Basis& basis) {
  require_same_tower(L.tower(), basis.tower());
  const std::uint32_t m = L.tower()->m();
  Matrix out(L.tower(), m, m);
  for (std::uint32_t j = 0; j < m; ++j) {
    const auto c = basis.coords(L.eval(basis[j]));
    for (std::uint32_t i = 0; i < m; ++i) out(i, j) = c[i];
  }
#ifndef NDEBUG
  assert(check_linearity(L, 4, 0x5eed));
#endif
  return out;
}

const Basis& coordinate_basis(const TowerPtr& tower) {
  static std::mutex mu;
  static std::map<const FieldTower*, std::pair<std::weak_ptr<const FieldTower>, std::shared_ptr<const Basis>>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(tower.get());
  if (it != cache.end() && !it->second.first.expired() && it->second.first.lock() == tower) return *it->second.second;
  for (auto i = cache.begin(); i != cache.end();) i = i->second.first.expired() ? cache.erase(i) : std::next(i);
  auto b = std::make_shared<const Basis>(Basis::polynomial(tower));
  auto& slot = cache[tower.get()];
  slot = {tower, b};
  return *slot.second;
}

std::size_t op_rank(const QPoly& L) { return op_matrix(L, coordinate_basis(L.tower())).rank(); }

std::vector<FieldElem> op_kernel_basis(const QPoly& L) {
  const Basis& b = coordinate_basis(L.tower());
  std::vector<FieldElem> out;
  for (const auto& v : op_matrix(L, b).kernel()) out.push_back(b.combine(v));
  return out;
}

std::vector<FieldElem> op_image_basis(const QPoly& L) {
  const Basis& b = coordinate_basis(L.tower());
  std::vector<std::size_t> piv;
  op_matrix(L, b).rref(&piv);
  std::vector<FieldElem> out;
  for (auto j : piv) out.push_back(L.eval(b[j]));
  return out;
}

bool check_linearity(const QPoly& L, unsigned samples, std::uint64_t seed) {
  const FieldTower& t = *L.tower();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> pick(0, t.size() - 1);
  std::uniform_int_distribution<std::size_t> pick_base(0, t.base_elements().size() - 1);
  for (unsigned s = 0; s < samples; ++s) {
    const FieldElem x = t.element(pick(rng)), y = t.element(pick(rng));
    const FieldElem c = t.base_elements()[pick_base(rng)];
    if (L.eval(t.add(x, y)) != t.add(L.eval(x), L.eval(y))) return false;
    if (L.eval(t.mul(c, x)) != t.mul(c, L.eval(x))) return false;
  }
  return true;
}

}  // namespace linhull
