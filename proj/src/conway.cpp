// SPDX-License-Identifier: Apache-2.0
//
// Conway polynomials by direct search. C_{p,n} is the least monic primitive
// polynomial of degree n over GF(p) under the ordering of the tuple
// (a_{n-1}, ..., a_0) where the coefficient of x^i is (-1)^(n-i) a_i, subject to
// C_{p,d}(x^((p^n-1)/(p^d-1))) = 0 mod C_{p,n} for every proper divisor d | n.
#include <map>
#include <mutex>

#include "linhull/error.hpp"
#include "linhull/field.hpp"
#include "linhull/numtheory.hpp"

namespace linhull {
namespace {

using Poly = std::vector<std::uint32_t>;  // residues mod f, length n

class Ring {
 public:
  Ring(std::uint32_t p, const Poly& f) : p_(p), f_(f), n_(static_cast<std::uint32_t>(f.size() - 1)) {}

  Poly one() const {
    Poly r(n_, 0);
    r[0] = 1 % p_;
    return r;
  }

  Poly x() const {
    Poly r(n_, 0);
    if (n_ == 1)
      r[0] = (p_ - f_[0]) % p_;
    else
      r[1] = 1;
    return r;
  }

  Poly mul(const Poly& a, const Poly& b) const {
    std::vector<std::uint64_t> prod(2 * n_ - 1, 0);
    for (std::uint32_t i = 0; i < n_; ++i) {
      if (a[i] == 0) continue;
      for (std::uint32_t j = 0; j < n_; ++j) prod[i + j] += std::uint64_t{a[i]} * b[j];
    }
    for (auto& c : prod) c %= p_;
    for (std::uint32_t i = 2 * n_ - 2; i >= n_; --i) {
      const std::uint64_t c = prod[i];
      if (c == 0) continue;
      for (std::uint32_t j = 0; j < n_; ++j)
        prod[i - n_ + j] = (prod[i - n_ + j] + (p_ - c) * f_[j]) % p_;
      prod[i] = 0;
    }
    Poly r(n_);
    for (std::uint32_t i = 0; i < n_; ++i) r[i] = static_cast<std::uint32_t>(prod[i]);
    return r;
  }

  Poly pow(Poly a, std::uint64_t e) const {
    Poly acc = one();
    while (e) {
      if (e & 1) acc = mul(acc, a);
      a = mul(a, a);
      e >>= 1;
    }
    return acc;
  }

  Poly add(Poly a, const Poly& b) const {
    for (std::uint32_t i = 0; i < n_; ++i) a[i] = (a[i] + b[i]) % p_;
    return a;
  }

  /// g(y) for g with coefficients low to high.
  Poly eval(const Poly& g, const Poly& y) const {
    Poly acc(n_, 0);
    for (std::size_t i = g.size(); i-- > 0;) {
      acc = mul(acc, y);
      acc[0] = (acc[0] + g[i]) % p_;
    }
    return acc;
  }

 private:
  std::uint32_t p_;
  Poly f_;
  std::uint32_t n_;
};

// Characteristic-two variant with bitmask polynomials.
class Ring2 {
 public:
  explicit Ring2(std::uint64_t f, std::uint32_t n) : f_(f), n_(n) {}

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t r = 0;
    while (b) {
      if (b & 1) r ^= a;
      b >>= 1;
      a <<= 1;
      if ((a >> n_) & 1) a ^= f_;
    }
    return r;
  }

  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t acc = 1;
    while (e) {
      if (e & 1) acc = mul(acc, a);
      a = mul(a, a);
      e >>= 1;
    }
    return acc;
  }

  std::uint64_t eval(const Poly& g, std::uint64_t y) const {
    std::uint64_t acc = 0;
    for (std::size_t i = g.size(); i-- > 0;) acc = mul(acc, y) ^ (g[i] & 1);
    return acc;
  }

  std::uint64_t x() const { return n_ == 1 ? (f_ & 1) : 2; }

 private:
  std::uint64_t f_;
  std::uint32_t n_;
};

std::uint32_t smallest_primitive_root(std::uint32_t p) {
  if (p == 2) return 1;
  const auto fac = factorize(p - 1);
  for (std::uint32_t g = 1; g < p; ++g) {
    bool ok = true;
    for (auto [l, e] : fac) {
      (void)e;
      if (pow_mod(g, (p - 1) / l, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  raise(ErrorCode::NotPrime, "no primitive root");
}

struct Search {
  std::uint32_t p;
  std::uint32_t n;
  std::uint64_t order;
  std::vector<std::uint64_t> order_primes;
  std::vector<std::pair<std::uint64_t, Poly>> compat;  // (exponent, C_d), largest d first
};

bool accept_odd(const Search& s, const Poly& f) {
  const Ring ring(s.p, f);
  const Poly x = ring.x();
  const Poly zero(s.n, 0);
  for (const auto& [exp, cd] : s.compat)
    if (ring.eval(cd, ring.pow(x, exp)) != zero) return false;
  const Poly one = ring.one();
  if (ring.pow(x, s.order) != one) return false;
  for (auto l : s.order_primes)
    if (ring.pow(x, s.order / l) == one) return false;
  return true;
}

bool accept_two(const Search& s, std::uint64_t f) {
  const Ring2 ring(f, s.n);
  const std::uint64_t x = ring.x();
  for (const auto& [exp, cd] : s.compat)
    if (ring.eval(cd, ring.pow(x, exp)) != 0) return false;
  if (ring.pow(x, s.order) != 1) return false;
  for (auto l : s.order_primes)
    if (ring.pow(x, s.order / l) == 1) return false;
  return true;
}

Poly compute(std::uint32_t p, std::uint32_t n) {
  const std::uint32_t g1 = smallest_primitive_root(p);
  if (n == 1) return {(p - g1) % p, 1};

  Search s{p, n, *checked_pow(p, n) - 1, {}, {}};
  for (auto [l, e] : factorize(s.order)) {
    (void)e;
    s.order_primes.push_back(l);
  }
  auto divs = divisors(n);
  for (auto it = divs.rbegin(); it != divs.rend(); ++it) {
    const auto d = static_cast<std::uint32_t>(*it);
    if (d == n) continue;
    s.compat.emplace_back(s.order / (*checked_pow(p, d) - 1), conway_polynomial(p, d));
  }

  // alpha_0 is pinned to g1 by compatibility with C_{p,1}; enumerate the
  // remaining tuple (alpha_{n-1}, ..., alpha_1) in lexicographic order.
  std::vector<std::uint32_t> alpha(n, 0);
  alpha[0] = g1;
  const auto coeff = [&](std::uint32_t i) {
    const std::uint32_t a = alpha[i] % p;
    return ((n - i) % 2 == 0) ? a : (p - a) % p;
  };
  for (;;) {
    Poly f(n + 1);
    for (std::uint32_t i = 0; i < n; ++i) f[i] = coeff(i);
    f[n] = 1;
    bool ok;
    if (p == 2) {
      std::uint64_t mask = 0;
      for (std::uint32_t i = 0; i <= n; ++i)
        if (f[i]) mask |= std::uint64_t{1} << i;
      ok = accept_two(s, mask);
    } else {
      ok = accept_odd(s, f);
    }
    if (ok) return f;
    // Increment with alpha_1 least significant among the free positions.
    std::uint32_t i = 1;
    while (i < n) {
      if (++alpha[i] < p) break;
      alpha[i] = 0;
      ++i;
    }
    if (i == n) raise(ErrorCode::InvalidArgument, "Conway polynomial search exhausted");
  }
}

}  // namespace

std::vector<std::uint32_t> conway_polynomial(std::uint32_t p, std::uint32_t n) {
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, std::uint32_t>, Poly> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find({p, n}); it != cache.end()) return it->second;
  }
  if (!is_prime(p)) raise(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (n == 0) raise(ErrorCode::InvalidArgument, "degree must be positive");
  Poly f = compute(p, n);
  std::lock_guard lock(mu);
  cache.emplace(std::pair{p, n}, f);
  return f;
}

}  // namespace linhull
