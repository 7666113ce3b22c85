// SPDX-License-Identifier: Apache-2.0
#include "linhull/poly.hpp"

#include <algorithm>
#include <utility>

#include "linhull/error.hpp"

namespace linhull {

UniPoly::UniPoly(TowerPtr tower, std::vector<FieldElem> coeffs) : tower_(std::move(tower)), c_(std::move(coeffs)) {
  trim();
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back().packed == 0) c_.pop_back();
}

FieldElem UniPoly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : FieldElem{}; }

FieldElem UniPoly::leading() const { return c_.empty() ? FieldElem{} : c_.back(); }

FieldElem UniPoly::eval(FieldElem x) const {
  FieldElem acc{};
  for (std::size_t i = c_.size(); i-- > 0;) acc = tower_->add(tower_->mul(acc, x), c_[i]);
  return acc;
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (is_zero() || o.is_zero()) return UniPoly(tower_, {});
  std::vector<FieldElem> out(c_.size() + o.c_.size() - 1, FieldElem{});
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] = tower_->add(out[i + j], tower_->mul(c_[i], o.c_[j]));
  return UniPoly(tower_, std::move(out));
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  std::vector<FieldElem> out(std::max(c_.size(), o.c_.size()), FieldElem{});
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = tower_->add(coeff(i), o.coeff(i));
  return UniPoly(tower_ ? tower_ : o.tower_, std::move(out));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  const FieldElem s = tower_->inv(leading());
  std::vector<FieldElem> out(c_);
  for (auto& c : out) c = tower_->mul(c, s);
  return UniPoly(tower_, std::move(out));
}

UniPoly UniPoly::interpolate(TowerPtr tower, const std::vector<FieldElem>& xs, const std::vector<FieldElem>& ys) {
  if (xs.size() != ys.size()) raise(ErrorCode::InvalidArgument, "interpolation needs matching node/value counts");
  const FieldTower& t = *tower;
  UniPoly acc(tower, {});
  for (std::size_t i = 0; i < xs.size(); ++i) {
    UniPoly basis(tower, {t.one()});
    FieldElem denom = t.one();
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      if (xs[i] == xs[j]) raise(ErrorCode::InvalidArgument, "interpolation nodes must be distinct");
      basis = basis * UniPoly(tower, {t.neg(xs[j]), t.one()});
      denom = t.mul(denom, t.sub(xs[i], xs[j]));
    }
    const FieldElem s = t.div(ys[i], denom);
    std::vector<FieldElem> scaled(basis.coeffs());
    for (auto& c : scaled) c = t.mul(c, s);
    acc = acc + UniPoly(tower, std::move(scaled));
  }
  return acc;
}

std::string UniPoly::format(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i].packed == 0) continue;
    if (!out.empty()) out += "+";
    std::string c = tower_->format(c_[i]);
    if (c.find('+') != std::string::npos) c = "(" + c + ")";
    if (i == 0) {
      out += c;
      continue;
    }
    if (c != "1") out += c + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace linhull
