// SPDX-License-Identifier: Apache-2.0
//
// Exact arithmetic in the tower GF(p) c GF(q) c GF(q^m), q = p^r.
//
// Elements are stored in the polynomial basis of GF(p^(r*m)) over GF(p),
// packed as the base-p integer sum c_i p^i. The packed value doubles as the
// deterministic enumeration order of the field. Subfields are not separate
// types: an element lies in GF(q^s) iff it is fixed by x -> x^(q^s).
//
// The defining modulus is the Conway polynomial of degree r*m over GF(p),
// computed from its definition, so that the root `a` is primitive and the
// embedded copies of smaller Conway fields are canonical.
#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace linhull {

struct FieldElem {
  std::uint32_t packed = 0;

  friend constexpr auto operator<=>(FieldElem, FieldElem) = default;
};

inline constexpr std::uint64_t kDefaultSizeCap = std::uint64_t{1} << 24;

class FieldTower;
using TowerPtr = std::shared_ptr<const FieldTower>;

/// Conway polynomial C_{p,n}, coefficients low to high (monic, length n+1).
/// Results are memoised; safe to call concurrently.
std::vector<std::uint32_t> conway_polynomial(std::uint32_t p, std::uint32_t n);

class FieldTower {
 public:
  /// Throws NotPrime, SizeCapExceeded or InvalidArgument.
  static TowerPtr build(std::uint32_t p, std::uint32_t r, std::uint32_t m,
                        std::uint64_t size_cap = kDefaultSizeCap);

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t r() const noexcept { return r_; }
  std::uint32_t m() const noexcept { return m_; }
  /// Degree r*m of GF(q^m) over GF(p).
  std::uint32_t degree() const noexcept { return n_; }
  std::uint64_t q() const noexcept { return q_; }
  std::uint64_t size() const noexcept { return size_; }
  std::uint64_t order() const noexcept { return size_ - 1; }
  std::span<const std::uint32_t> modulus() const noexcept { return modulus_; }

  FieldElem zero() const noexcept { return {0}; }
  FieldElem one() const noexcept { return {1}; }
  FieldElem generator() const noexcept { return generator_; }
  /// Prime-field element v mod p.
  FieldElem from_int(std::int64_t v) const noexcept;
  /// i-th element in enumeration order.
  FieldElem element(std::uint64_t index) const;
  std::vector<FieldElem> elements() const;

  FieldElem add(FieldElem a, FieldElem b) const noexcept;
  FieldElem sub(FieldElem a, FieldElem b) const noexcept;
  FieldElem neg(FieldElem a) const noexcept;
  FieldElem mul(FieldElem a, FieldElem b) const noexcept;
  /// Throws DegenerateInput on zero.
  FieldElem inv(FieldElem a) const;
  FieldElem div(FieldElem a, FieldElem b) const;
  FieldElem pow(FieldElem a, std::uint64_t e) const noexcept;

  /// x^(q^(e mod m)).
  FieldElem frobenius_pow(FieldElem x, std::int64_t e) const noexcept;
  /// Relative trace to GF(q^s): sum_{i < m/s} x^(q^(s i)). Throws NotADivisor.
  FieldElem trace_rel(FieldElem x, std::uint32_t s) const;
  /// Absolute trace to GF(q).
  FieldElem trace(FieldElem x) const noexcept;
  bool in_subfield(FieldElem x, std::uint32_t s) const;
  bool in_base_field(FieldElem x) const noexcept;

  /// Elements of GF(q^s) embedded in GF(q^m), in enumeration order.
  std::vector<FieldElem> subfield(std::uint32_t s) const;
  /// GF(q) inside GF(q^m), in enumeration order.
  const std::vector<FieldElem>& base_elements() const noexcept { return base_elems_; }
  /// Position of a GF(q) element within base_elements().
  std::size_t base_index(FieldElem x) const;
  /// a^((q^m-1)/(q-1)): root of the Conway polynomial C_{p,r}.
  FieldElem base_generator() const noexcept { return base_gen_; }

  std::uint64_t log(FieldElem x) const;
  std::uint64_t multiplicative_order(FieldElem x) const;

  std::vector<std::uint32_t> digits(FieldElem x) const;
  FieldElem from_digits(std::span<const std::uint32_t> digits) const;

  /// Smallest normal element of GF(q^m)/GF(q) in enumeration order.
  FieldElem normal_element() const noexcept { return normal_; }

  /// Polynomial rendering in the generator `a`, e.g. "a^5+a^4+a^2+1".
  /// Degree-one towers render as integers.
  std::string format(FieldElem x) const;
  /// Accepts sums of terms c, a, a^e, c*a^e (the rendering of format(), or
  /// pure powers of `a`). Throws ParseError.
  FieldElem parse(std::string_view text) const;

 private:
  FieldTower() = default;

  FieldElem mul_slow(FieldElem a, FieldElem b) const noexcept;
  FieldElem mul_by_root(FieldElem a) const noexcept;
  FieldElem pow_slow(FieldElem a, std::uint64_t e) const noexcept;

  std::uint32_t p_ = 2, r_ = 1, m_ = 1, n_ = 1;
  std::uint64_t q_ = 2, size_ = 2;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> pow_p_;
  // exp_ has length 2*order so that exp_[log a + log b] needs no reduction.
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint64_t> frob_exp_;  // q^e mod order, e < m
  FieldElem generator_{1};
  FieldElem base_gen_{1};
  FieldElem normal_{1};
  std::vector<FieldElem> base_elems_;
};

/// F_q-basis of GF(q^m) with cached coordinate extraction.
class Basis {
 public:
  /// Throws InvalidArgument unless `elems` has m F_q-independent elements.
  static Basis from_elements(TowerPtr tower, std::vector<FieldElem> elems);
  /// {beta, beta^q, ..., beta^(q^(m-1))}; throws NotNormalBasis if dependent.
  static Basis normal(TowerPtr tower, FieldElem beta);
  /// {1, t, ..., t^(m-1)} for the smallest t (in enumeration order) whose
  /// powers are independent over GF(q).
  static Basis polynomial(TowerPtr tower);

  const TowerPtr& tower() const noexcept { return tower_; }
  std::span<const FieldElem> elements() const noexcept { return elems_; }
  FieldElem operator[](std::size_t i) const { return elems_.at(i); }
  std::size_t size() const noexcept { return elems_.size(); }
  bool is_normal() const noexcept { return normal_.has_value(); }
  std::optional<FieldElem> normal_element() const noexcept { return normal_; }

  /// c in GF(q)^m with sum c_i e_i = x.
  std::vector<FieldElem> coords(FieldElem x) const;
  FieldElem combine(std::span<const FieldElem> c) const;

 private:
  TowerPtr tower_;
  std::vector<FieldElem> elems_;
  std::optional<FieldElem> normal_;
  // Inverse of the n x n GF(p) matrix with columns gamma^j e_i, row-major.
  std::vector<std::uint32_t> inverse_;
};

/// Normal basis generated by the tower's smallest normal element.
Basis find_normal_element(const TowerPtr& tower);

inline std::vector<FieldElem> coords(FieldElem x, const Basis& basis) {
  return basis.coords(x);
}

}  // namespace linhull
