// SPDX-License-Identifier: Apache-2.0
#include "linhull/field.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "linhull/error.hpp"
#include "linhull/numtheory.hpp"

namespace linhull {
namespace {

constexpr std::uint64_t kTableCap = std::uint64_t{1} << 22;

using ModpMatrix = std::vector<std::vector<std::uint32_t>>;

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  return static_cast<std::uint32_t>(pow_mod(a, p - 2, p));
}

// Row-reduces `a` in place over GF(p) and returns the rank.
std::size_t rref_mod(ModpMatrix& a, std::uint32_t p) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    const std::uint64_t s = inv_mod(a[rank][c], p);
    for (auto& v : a[rank]) v = static_cast<std::uint32_t>(v * s % p);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || a[i][c] == 0) continue;
      const std::uint64_t f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j)
        a[i][j] = static_cast<std::uint32_t>((a[i][j] + (p - f) * a[rank][j]) % p);
    }
    ++rank;
  }
  return rank;
}

}  // namespace

TowerPtr FieldTower::build(std::uint32_t p, std::uint32_t r, std::uint32_t m,
                           std::uint64_t size_cap) {
  if (!is_prime(p)) raise(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (r == 0 || m == 0) raise(ErrorCode::InvalidArgument, "r and m must be positive");
  const auto size = checked_pow(p, std::uint64_t{r} * m);
  if (!size || *size > size_cap || *size > (std::uint64_t{1} << 32) - 1)
    raise(ErrorCode::SizeCapExceeded, "GF(" + std::to_string(p) + "^" + std::to_string(r * m) +
                                          ") exceeds the size cap of " +
                                          std::to_string(size_cap) + " elements");

  std::shared_ptr<FieldTower> t(new FieldTower());
  t->p_ = p;
  t->r_ = r;
  t->m_ = m;
  t->n_ = r * m;
  t->q_ = *checked_pow(p, r);
  t->size_ = *size;
  t->modulus_ = conway_polynomial(p, t->n_);
  t->pow_p_.resize(t->n_ + 1);
  t->pow_p_[0] = 1;
  for (std::uint32_t i = 1; i <= t->n_; ++i) t->pow_p_[i] = t->pow_p_[i - 1] * p;
  t->generator_ = t->n_ == 1 ? FieldElem{(p - t->modulus_[0]) % p} : FieldElem{p};

  const std::uint64_t order = t->order();
  if (t->size_ <= kTableCap) {
    t->exp_.resize(2 * order + 1);
    t->log_.assign(t->size_, 0);
    FieldElem x = t->one();
    for (std::uint64_t i = 0; i < order; ++i) {
      t->exp_[i] = t->exp_[i + order] = x.packed;
      t->log_[x.packed] = static_cast<std::uint32_t>(i);
      x = t->mul_by_root(x);
    }
    t->exp_[2 * order] = 1;
  }
  t->frob_exp_.resize(m);
  for (std::uint32_t e = 0; e < m; ++e) t->frob_exp_[e] = pow_mod(t->q_, e, order == 0 ? 1 : order);

  t->base_gen_ = t->pow(t->generator_, order / (t->q_ - 1));
  t->base_elems_.push_back(t->zero());
  FieldElem g = t->one();
  for (std::uint64_t i = 0; i + 1 < t->q_; ++i) {
    t->base_elems_.push_back(g);
    g = t->mul(g, t->base_gen_);
  }
  std::sort(t->base_elems_.begin(), t->base_elems_.end());

  // Exhaustive search in enumeration order for the first normal element.
  for (std::uint64_t i = 1; i < t->size_; ++i) {
    const FieldElem b{static_cast<std::uint32_t>(i)};
    ModpMatrix mat(t->n_, std::vector<std::uint32_t>(t->n_));
    FieldElem gj = t->one();
    for (std::uint32_t j = 0; j < r; ++j) {
      for (std::uint32_t k = 0; k < m; ++k) {
        const auto d = t->digits(t->mul(gj, t->frobenius_pow(b, k)));
        for (std::uint32_t row = 0; row < t->n_; ++row) mat[row][j * m + k] = d[row];
      }
      gj = t->mul(gj, t->base_gen_);
    }
    if (rref_mod(mat, p) == t->n_) {
      t->normal_ = b;
      break;
    }
  }
  return t;
}

FieldElem FieldTower::from_int(std::int64_t v) const noexcept {
  const auto pp = static_cast<std::int64_t>(p_);
  return FieldElem{static_cast<std::uint32_t>(((v % pp) + pp) % pp)};
}

FieldElem FieldTower::element(std::uint64_t index) const {
  if (index >= size_) raise(ErrorCode::InvalidArgument, "element index out of range");
  return FieldElem{static_cast<std::uint32_t>(index)};
}

std::vector<FieldElem> FieldTower::elements() const {
  std::vector<FieldElem> out(size_);
  for (std::uint64_t i = 0; i < size_; ++i) out[i] = FieldElem{static_cast<std::uint32_t>(i)};
  return out;
}

std::vector<std::uint32_t> FieldTower::digits(FieldElem x) const {
  std::vector<std::uint32_t> d(n_);
  std::uint32_t v = x.packed;
  for (std::uint32_t i = 0; i < n_; ++i) {
    d[i] = v % p_;
    v /= p_;
  }
  return d;
}

FieldElem FieldTower::from_digits(std::span<const std::uint32_t> d) const {
  std::uint32_t v = 0;
  for (std::size_t i = d.size(); i-- > 0;) v = v * p_ + d[i] % p_;
  return FieldElem{v};
}

FieldElem FieldTower::add(FieldElem a, FieldElem b) const noexcept {
  if (p_ == 2) return FieldElem{a.packed ^ b.packed};
  std::uint32_t x = a.packed, y = b.packed, out = 0;
  for (std::uint32_t i = 0; i < n_; ++i) {
    const std::uint32_t s = (x % p_ + y % p_) % p_;
    out += s * pow_p_[i];
    x /= p_;
    y /= p_;
  }
  return FieldElem{out};
}

FieldElem FieldTower::neg(FieldElem a) const noexcept {
  if (p_ == 2) return a;
  std::uint32_t x = a.packed, out = 0;
  for (std::uint32_t i = 0; i < n_; ++i) {
    out += ((p_ - x % p_) % p_) * pow_p_[i];
    x /= p_;
  }
  return FieldElem{out};
}

FieldElem FieldTower::sub(FieldElem a, FieldElem b) const noexcept { return add(a, neg(b)); }

FieldElem FieldTower::mul_by_root(FieldElem a) const noexcept {
  if (n_ == 1) return FieldElem{static_cast<std::uint32_t>(std::uint64_t{a.packed} * generator_.packed % p_)};
  auto d = digits(a);
  const std::uint32_t top = d[n_ - 1];
  for (std::uint32_t i = n_ - 1; i > 0; --i) d[i] = d[i - 1];
  d[0] = 0;
  if (top)
    for (std::uint32_t i = 0; i < n_; ++i)
      d[i] = static_cast<std::uint32_t>((d[i] + std::uint64_t{p_ - top} * modulus_[i]) % p_);
  return from_digits(d);
}

FieldElem FieldTower::mul_slow(FieldElem a, FieldElem b) const noexcept {
  const auto da = digits(a), db = digits(b);
  std::vector<std::uint64_t> prod(2 * n_ - 1, 0);
  for (std::uint32_t i = 0; i < n_; ++i)
    for (std::uint32_t j = 0; j < n_; ++j) prod[i + j] += std::uint64_t{da[i]} * db[j];
  for (auto& c : prod) c %= p_;
  for (std::uint32_t i = 2 * n_ - 2; i >= n_; --i) {
    const std::uint64_t c = prod[i];
    if (c == 0) continue;
    for (std::uint32_t j = 0; j < n_; ++j) prod[i - n_ + j] = (prod[i - n_ + j] + (p_ - c) * modulus_[j]) % p_;
  }
  std::vector<std::uint32_t> out(n_);
  for (std::uint32_t i = 0; i < n_; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
  return from_digits(out);
}

FieldElem FieldTower::mul(FieldElem a, FieldElem b) const noexcept {
  if (a.packed == 0 || b.packed == 0) return zero();
  if (!exp_.empty()) return FieldElem{exp_[std::uint64_t{log_[a.packed]} + log_[b.packed]]};
  return mul_slow(a, b);
}

FieldElem FieldTower::pow_slow(FieldElem a, std::uint64_t e) const noexcept {
  FieldElem acc = one();
  while (e) {
    if (e & 1) acc = mul_slow(acc, a);
    a = mul_slow(a, a);
    e >>= 1;
  }
  return acc;
}

FieldElem FieldTower::pow(FieldElem a, std::uint64_t e) const noexcept {
  if (e == 0) return one();
  if (a.packed == 0) return zero();
  const std::uint64_t ord = order();
  if (ord == 0) return one();
  if (!exp_.empty()) {
    const auto k = static_cast<unsigned __int128>(log_[a.packed]) * (e % ord) % ord;
    return FieldElem{exp_[static_cast<std::uint64_t>(k)]};
  }
  return pow_slow(a, e % ord == 0 ? ord : e % ord);
}

FieldElem FieldTower::inv(FieldElem a) const {
  if (a.packed == 0) raise(ErrorCode::DegenerateInput, "inverse of zero");
  if (!exp_.empty()) return FieldElem{exp_[order() - log_[a.packed]]};
  return pow_slow(a, order() - 1);
}

FieldElem FieldTower::div(FieldElem a, FieldElem b) const { return mul(a, inv(b)); }

FieldElem FieldTower::frobenius_pow(FieldElem x, std::int64_t e) const noexcept {
  const auto mm = static_cast<std::int64_t>(m_);
  const auto idx = static_cast<std::uint32_t>(((e % mm) + mm) % mm);
  if (idx == 0 || x.packed == 0) return x;
  return pow(x, frob_exp_[idx]);
}

FieldElem FieldTower::trace_rel(FieldElem x, std::uint32_t s) const {
  if (s == 0 || m_ % s != 0)
    raise(ErrorCode::NotADivisor, std::to_string(s) + " does not divide m = " + std::to_string(m_));
  FieldElem acc = zero();
  for (std::uint32_t i = 0; i < m_ / s; ++i) acc = add(acc, frobenius_pow(x, std::int64_t{s} * i));
  return acc;
}

FieldElem FieldTower::trace(FieldElem x) const noexcept {
  FieldElem acc = zero();
  for (std::uint32_t i = 0; i < m_; ++i) acc = add(acc, frobenius_pow(x, i));
  return acc;
}

bool FieldTower::in_subfield(FieldElem x, std::uint32_t s) const {
  if (s == 0 || m_ % s != 0)
    raise(ErrorCode::NotADivisor, std::to_string(s) + " does not divide m = " + std::to_string(m_));
  return frobenius_pow(x, s) == x;
}

bool FieldTower::in_base_field(FieldElem x) const noexcept { return frobenius_pow(x, 1) == x; }

std::vector<FieldElem> FieldTower::subfield(std::uint32_t s) const {
  if (s == 0 || m_ % s != 0)
    raise(ErrorCode::NotADivisor, std::to_string(s) + " does not divide m = " + std::to_string(m_));
  if (s == m_) return elements();
  const std::uint64_t sub_size = *checked_pow(q_, s);
  const FieldElem g = pow(generator_, order() / (sub_size - 1));
  std::vector<FieldElem> out{zero()};
  FieldElem x = one();
  for (std::uint64_t i = 0; i + 1 < sub_size; ++i) {
    out.push_back(x);
    x = mul(x, g);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t FieldTower::base_index(FieldElem x) const {
  const auto it = std::lower_bound(base_elems_.begin(), base_elems_.end(), x);
  if (it == base_elems_.end() || *it != x)
    raise(ErrorCode::InvalidArgument, format(x) + " is not in GF(q)");
  return static_cast<std::size_t>(it - base_elems_.begin());
}

std::uint64_t FieldTower::log(FieldElem x) const {
  if (x.packed == 0) raise(ErrorCode::DegenerateInput, "logarithm of zero");
  if (!log_.empty()) return log_[x.packed];
  FieldElem y = one();
  for (std::uint64_t i = 0; i < order(); ++i) {
    if (y == x) return i;
    y = mul_by_root(y);
  }
  raise(ErrorCode::InvalidArgument, "logarithm not found");
}

std::uint64_t FieldTower::multiplicative_order(FieldElem x) const {
  if (x.packed == 0) raise(ErrorCode::DegenerateInput, "order of zero");
  std::uint64_t ord = order();
  for (auto [l, e] : factorize(order())) {
    for (int i = 0; i < e; ++i) {
      if (pow(x, ord / l) != one()) break;
      ord /= l;
    }
  }
  return ord;
}

std::string FieldTower::format(FieldElem x) const {
  if (n_ == 1) return std::to_string(x.packed);
  if (x.packed == 0) return "0";
  const auto d = digits(x);
  std::ostringstream os;
  bool first = true;
  for (std::uint32_t i = n_; i-- > 0;) {
    if (d[i] == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0) {
      os << d[i];
      continue;
    }
    if (d[i] != 1) os << d[i] << '*';
    os << 'a';
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

FieldElem FieldTower::parse(std::string_view text) const {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) raise(ErrorCode::ParseError, "empty element");
  std::size_t pos = 0;
  const auto fail = [&](const std::string& why) -> FieldElem {
    raise(ErrorCode::ParseError, "cannot parse element '" + std::string(text) + "': " + why);
  };
  const auto read_int = [&]() -> std::uint64_t {
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) fail("expected integer");
    std::uint64_t v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      if (v > UINT64_MAX / 10 - 10) fail("integer too large");
      v = v * 10 + static_cast<std::uint64_t>(s[pos++] - '0');
    }
    return v;
  };
  const auto factor = [&]() -> FieldElem {
    if (pos < s.size() && s[pos] == 'a') {
      ++pos;
      std::uint64_t e = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        e = read_int();
      }
      return pow(generator_, e);
    }
    return from_int(static_cast<std::int64_t>(read_int() % p_));
  };
  const auto term = [&]() -> FieldElem {
    FieldElem v = factor();
    while (pos < s.size() && s[pos] == '*') {
      ++pos;
      v = mul(v, factor());
    }
    return v;
  };
  FieldElem acc = zero();
  bool negate = false;
  if (s[0] == '-') {
    negate = true;
    ++pos;
  }
  for (;;) {
    const FieldElem t = term();
    acc = negate ? sub(acc, t) : add(acc, t);
    if (pos == s.size()) break;
    if (s[pos] == '+')
      negate = false;
    else if (s[pos] == '-')
      negate = true;
    else
      fail(std::string("unexpected '") + s[pos] + "'");
    ++pos;
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Basis

namespace {

ModpMatrix q_coordinate_matrix(const FieldTower& t, std::span<const FieldElem> elems) {
  const std::uint32_t n = t.degree(), m = t.m();
  ModpMatrix mat(n, std::vector<std::uint32_t>(n));
  FieldElem gj = t.one();
  for (std::uint32_t j = 0; j < t.r(); ++j) {
    for (std::uint32_t i = 0; i < m; ++i) {
      const auto d = t.digits(t.mul(gj, elems[i]));
      for (std::uint32_t row = 0; row < n; ++row) mat[row][j * m + i] = d[row];
    }
    gj = t.mul(gj, t.base_generator());
  }
  return mat;
}

}  // namespace

Basis Basis::from_elements(TowerPtr tower, std::vector<FieldElem> elems) {
  if (!tower) raise(ErrorCode::InvalidArgument, "null tower");
  const FieldTower& t = *tower;
  if (elems.size() != t.m())
    raise(ErrorCode::InvalidArgument, "a basis needs exactly m = " + std::to_string(t.m()) + " elements");
  const std::uint32_t n = t.degree();
  ModpMatrix aug = q_coordinate_matrix(t, elems);
  for (std::uint32_t i = 0; i < n; ++i) {
    aug[i].resize(2 * n, 0);
    aug[i][n + i] = 1;
  }
  ModpMatrix left = aug;
  for (auto& row : left) row.resize(n);
  if (rref_mod(left, t.p()) != n)
    raise(ErrorCode::InvalidArgument, "elements are not linearly independent over GF(q)");
  rref_mod(aug, t.p());
  Basis b;
  b.tower_ = std::move(tower);
  b.elems_ = std::move(elems);
  b.inverse_.resize(std::size_t{n} * n);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) b.inverse_[std::size_t{i} * n + j] = aug[i][n + j];
  return b;
}

Basis Basis::normal(TowerPtr tower, FieldElem beta) {
  if (!tower) raise(ErrorCode::InvalidArgument, "null tower");
  std::vector<FieldElem> conj;
  for (std::uint32_t i = 0; i < tower->m(); ++i) conj.push_back(tower->frobenius_pow(beta, i));
  try {
    Basis b = from_elements(std::move(tower), std::move(conj));
    b.normal_ = beta;
    return b;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::InvalidArgument) throw;
    raise(ErrorCode::NotNormalBasis, "conjugates of the element are dependent over GF(q)");
  }
}

Basis Basis::polynomial(TowerPtr tower) {
  if (!tower) raise(ErrorCode::InvalidArgument, "null tower");
  const FieldTower& t = *tower;
  for (std::uint64_t i = 1; i < t.size(); ++i) {
    const FieldElem g{static_cast<std::uint32_t>(i)};
    std::vector<FieldElem> powers{t.one()};
    for (std::uint32_t k = 1; k < t.m(); ++k) powers.push_back(t.mul(powers.back(), g));
    ModpMatrix mat = q_coordinate_matrix(t, powers);
    if (rref_mod(mat, t.p()) == t.degree()) return from_elements(tower, std::move(powers));
  }
  raise(ErrorCode::InvalidArgument, "no polynomial basis found");
}

std::vector<FieldElem> Basis::coords(FieldElem x) const {
  const FieldTower& t = *tower_;
  const std::uint32_t n = t.degree(), m = t.m(), p = t.p();
  const auto d = t.digits(x);
  std::vector<std::uint32_t> y(n, 0);
  for (std::uint32_t i = 0; i < n; ++i) {
    std::uint64_t acc = 0;
    for (std::uint32_t j = 0; j < n; ++j) acc += std::uint64_t{inverse_[std::size_t{i} * n + j]} * d[j];
    y[i] = static_cast<std::uint32_t>(acc % p);
  }
  std::vector<FieldElem> c(m, t.zero());
  FieldElem gj = t.one();
  for (std::uint32_t j = 0; j < t.r(); ++j) {
    for (std::uint32_t i = 0; i < m; ++i)
      c[i] = t.add(c[i], t.mul(t.from_int(y[j * m + i]), gj));
    gj = t.mul(gj, t.base_generator());
  }
  return c;
}

FieldElem Basis::combine(std::span<const FieldElem> c) const {
  const FieldTower& t = *tower_;
  FieldElem acc = t.zero();
  for (std::size_t i = 0; i < c.size() && i < elems_.size(); ++i) acc = t.add(acc, t.mul(c[i], elems_[i]));
  return acc;
}

Basis find_normal_element(const TowerPtr& tower) { return Basis::normal(tower, tower->normal_element()); }

}  // namespace linhull
