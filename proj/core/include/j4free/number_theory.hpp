#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace j4free {

struct PrimePower {
  std::uint32_t p = 0;
  std::uint32_t h = 0;
};

bool is_prime(std::uint64_t n);

/// Decomposes q = p^h; nullopt when q is not a prime power.
std::optional<PrimePower> as_prime_power(std::uint64_t q);

/// As as_prime_power, throwing Errc::not_prime_power on failure.
PrimePower require_prime_power(std::uint64_t q);

/// Distinct prime factors in increasing order.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// All positive divisors in increasing order.
std::vector<std::uint64_t> divisors(std::uint64_t n);

std::uint64_t ipow(std::uint64_t base, unsigned exp);
std::uint64_t isqrt(std::uint64_t n);

/// Integer square root when n is a perfect square.
std::optional<std::uint64_t> exact_sqrt(std::uint64_t n);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

/// Multiplicative order of a modulo m; requires gcd(a, m) = 1 and m >= 2.
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m);

}  // namespace j4free
