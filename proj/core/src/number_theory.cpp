#include "j4free/number_theory.hpp"

#include <algorithm>
#include <numeric>

#include "j4free/error.hpp"

namespace j4free {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t f = 3; f * f <= n; f += 2) {
    if (n % f == 0) return false;
  }
  return true;
}

std::optional<PrimePower> as_prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::uint64_t p = 0;
  for (std::uint64_t f = 2; f * f <= q; ++f) {
    if (q % f == 0) {
      p = f;
      break;
    }
  }
  if (p == 0) return PrimePower{static_cast<std::uint32_t>(q), 1};
  std::uint32_t h = 0;
  while (q % p == 0) {
    q /= p;
    ++h;
  }
  if (q != 1) return std::nullopt;
  return PrimePower{static_cast<std::uint32_t>(p), h};
}

PrimePower require_prime_power(std::uint64_t q) {
  auto pp = as_prime_power(q);
  if (!pp) throw Error(Errc::not_prime_power, std::to_string(q) + " is not a prime power");
  return *pp;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      out.push_back(f);
      while (n % f == 0) n /= f;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t f = 1; f * f <= n; ++f) {
    if (n % f == 0) {
      small.push_back(f);
      if (f != n / f) large.push_back(n / f);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

std::uint64_t isqrt(std::uint64_t n) {
  std::uint64_t r = 0;
  std::uint64_t bit = std::uint64_t{1} << 62;
  while (bit > n) bit >>= 2;
  while (bit != 0) {
    if (n >= r + bit) {
      n -= r + bit;
      r = (r >> 1) + bit;
    } else {
      r >>= 1;
    }
    bit >>= 2;
  }
  return r;
}

std::optional<std::uint64_t> exact_sqrt(std::uint64_t n) {
  const auto r = isqrt(n);
  if (r * r == n) return r;
  return std::nullopt;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m) {
  if (m < 2 || std::gcd(a, m) != 1) {
    throw Error(Errc::not_coprime, "order of " + std::to_string(a) + " mod " + std::to_string(m));
  }
  a %= m;
  std::uint64_t x = a;
  std::uint64_t k = 1;
  while (x != 1 % m) {
    x = (x * a) % m;
    ++k;
  }
  return k;
}

}  // namespace j4free
