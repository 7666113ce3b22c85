// SPDX-License-Identifier: Apache-2.0
#include "linhull/numtheory.hpp"

#include <algorithm>
#include <sstream>

namespace linhull {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, int>> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e > 0) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::string format_factorization(std::uint64_t n) {
  std::ostringstream os;
  os << n << " = ";
  if (n < 2) {
    os << n;
    return os.str();
  }
  bool first = true;
  for (auto [prime, e] : factorize(n)) {
    if (!first) os << " * ";
    first = false;
    os << prime;
    if (e > 1) os << '^' << e;
  }
  return os.str();
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    if (d != n / d) out.push_back(n / d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t acc = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && acc > UINT64_MAX / base) return std::nullopt;
    acc *= base;
  }
  return acc;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  if (mod == 1) return 0;
  unsigned __int128 acc = 1;
  unsigned __int128 b = base % mod;
  while (exp) {
    if (exp & 1) acc = acc * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return static_cast<std::uint64_t>(acc);
}

}  // namespace linhull
