// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace linhull {

bool is_prime(std::uint64_t n);

/// Prime factorisation by trial division, primes ascending.
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n);

/// "63 = 3^2 * 7" style rendering of factorize(n).
std::string format_factorization(std::uint64_t n);

std::vector<std::uint64_t> divisors(std::uint64_t n);

/// base^exp, or nullopt when the result does not fit in 64 bits.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint64_t exp);

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

}  // namespace linhull
