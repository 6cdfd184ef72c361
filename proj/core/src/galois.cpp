#include "j4free/galois.hpp"

#include <algorithm>

#include "j4free/error.hpp"
#include "j4free/number_theory.hpp"

namespace j4free {
namespace {

using Poly = std::vector<std::uint32_t>;

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t r = 1, b = a % p;
  for (std::uint32_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
  }
  return static_cast<std::uint32_t>(r);
}

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of a modulo the monic polynomial m.
Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - lead) * m[i]) % p);
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    }
  }
  return poly_mod(std::move(r), m, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& m, std::uint32_t p) {
  Poly r{1};
  base = poly_mod(std::move(base), m, p);
  while (e > 0) {
    if (e & 1) r = poly_mulmod(r, base, m, p);
    base = poly_mulmod(base, base, m, p);
    e >>= 1;
  }
  return poly_mod(std::move(r), m, p);
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    const std::uint32_t li = inv_mod(b.back(), p);
    for (auto& c : b) c = static_cast<std::uint32_t>(std::uint64_t{c} * li % p);
    a = poly_mod(std::move(a), b, p);
    std::swap(a, b);
  }
  return a;
}

// x^(p^k) mod m via repeated p-th powering.
Poly frobenius_x(const Poly& m, std::uint32_t p, std::uint32_t k) {
  Poly r = poly_mod(Poly{0, 1}, m, p);
  for (std::uint32_t i = 0; i < k; ++i) r = poly_powmod(r, p, m, p);
  return r;
}

bool is_one(const Poly& f) { return f.size() == 1 && f[0] == 1; }

}  // namespace

bool is_irreducible(std::span<const std::uint32_t> coeffs, std::uint32_t p) {
  Poly f(coeffs.begin(), coeffs.end());
  for (auto& c : f) c %= p;
  trim(f);
  if (f.size() < 2) return false;
  const std::uint32_t li = inv_mod(f.back(), p);
  for (auto& c : f) c = static_cast<std::uint32_t>(std::uint64_t{c} * li % p);
  const auto n = static_cast<std::uint32_t>(f.size() - 1);
  if (n == 1) return true;

  auto x_minus = [&](Poly g) {
    g.resize(std::max<std::size_t>(g.size(), 2), 0);
    g[1] = (g[1] + p - 1) % p;
    trim(g);
    return g;
  };
  if (!x_minus(frobenius_x(f, p, n)).empty()) return false;
  for (auto r : prime_factors(n)) {
    const auto g = poly_gcd(f, x_minus(frobenius_x(f, p, n / static_cast<std::uint32_t>(r))), p);
    if (!is_one(g)) return false;
  }
  return true;
}

FieldCtx FieldCtx::create(std::uint32_t p, std::uint32_t h) {
  if (!is_prime(p)) throw Error(Errc::not_prime, std::to_string(p) + " is not prime");
  if (h == 0) throw Error(Errc::invalid_argument, "extension degree must be positive");
  std::uint64_t order = 1;
  for (std::uint32_t i = 0; i < h; ++i) {
    order *= p;
    if (order > kTableBound) {
      throw Error(Errc::table_overflow,
                  std::to_string(p) + "^" + std::to_string(h) + " exceeds the table bound");
    }
  }

  FieldCtx ctx;
  ctx.p_ = p;
  ctx.h_ = h;
  ctx.q_ = static_cast<std::uint32_t>(order);
  const std::uint64_t group = order - 1;
  const auto group_primes = prime_factors(group);

  // Candidates ordered by their lower coefficients read as a base-p integer.
  Poly f(h + 1, 0);
  f[h] = 1;
  bool found = false;
  for (std::uint64_t code = 0; code < order && !found; ++code) {
    std::uint64_t c = code;
    for (std::uint32_t i = 0; i < h; ++i) {
      f[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    if (f[0] == 0 && h > 1) continue;
    if (!is_irreducible(f, p)) continue;
    const Poly x{0, 1};
    if (!is_one(poly_powmod(x, group, f, p))) continue;
    bool primitive = true;
    for (auto r : group_primes) {
      if (is_one(poly_powmod(x, group / r, f, p))) {
        primitive = false;
        break;
      }
    }
    found = primitive;
  }
  if (!found) {
    throw Error(Errc::no_irreducible_polynomial,
                "no primitive modulus for GF(" + std::to_string(p) + "^" + std::to_string(h) + ")");
  }
  ctx.modulus_ = f;

  ctx.exp_.resize(group);
  ctx.log_.assign(order, -1);
  std::vector<std::uint32_t> state(h, 0);
  state[0] = 1;
  std::vector<std::uint32_t> weights(h, 1);
  for (std::uint32_t i = 1; i < h; ++i) weights[i] = weights[i - 1] * p;
  for (std::uint64_t i = 0; i < group; ++i) {
    std::uint32_t code = 0;
    for (std::uint32_t j = 0; j < h; ++j) code += state[j] * weights[j];
    if (ctx.log_[code] != -1) {
      throw Error(Errc::no_irreducible_polynomial, "modulus generator is not primitive");
    }
    ctx.exp_[i] = Element{code};
    ctx.log_[code] = static_cast<std::int32_t>(i);
    // Multiply by x and reduce by the monic modulus.
    const std::uint64_t top = state[h - 1];
    for (std::uint32_t j = h - 1; j > 0; --j) {
      state[j] = static_cast<std::uint32_t>((state[j - 1] + (p - top) * f[j]) % p);
    }
    state[0] = static_cast<std::uint32_t>(((p - top) * f[0]) % p);
  }
  return ctx;
}

std::uint32_t FieldCtx::log(Element a) const {
  if (a.code == 0 || a.code >= q_) throw Error(Errc::invalid_argument, "logarithm of zero");
  return static_cast<std::uint32_t>(log_[a.code]);
}

Element FieldCtx::add(Element a, Element b) const noexcept {
  if (p_ == 2) return Element{a.code ^ b.code};
  std::uint32_t out = 0, w = 1;
  std::uint32_t x = a.code, y = b.code;
  while (x != 0 || y != 0) {
    out += ((x % p_ + y % p_) % p_) * w;
    x /= p_;
    y /= p_;
    w *= p_;
  }
  return Element{out};
}

Element FieldCtx::neg(Element a) const noexcept {
  if (p_ == 2) return a;
  std::uint32_t out = 0, w = 1;
  for (std::uint32_t x = a.code; x != 0; x /= p_, w *= p_) out += ((p_ - x % p_) % p_) * w;
  return Element{out};
}

Element FieldCtx::sub(Element a, Element b) const noexcept { return add(a, neg(b)); }

Element FieldCtx::mul(Element a, Element b) const noexcept {
  if (a.code == 0 || b.code == 0) return zero();
  const std::uint64_t s = std::uint64_t(log_[a.code]) + std::uint64_t(log_[b.code]);
  return exp_[s % (q_ - 1)];
}

Element FieldCtx::inv(Element a) const {
  const std::uint32_t l = log(a);
  return exp_[(q_ - 1 - l) % (q_ - 1)];
}

Element FieldCtx::div(Element a, Element b) const { return mul(a, inv(b)); }

Element FieldCtx::pow(Element a, std::uint64_t e) const noexcept {
  if (e == 0) return one();
  if (a.code == 0) return zero();
  const std::uint64_t n = q_ - 1;
  return exp_[(std::uint64_t(log_[a.code]) % n) * (e % n) % n];
}

Element FieldCtx::frobenius(Element a, std::uint32_t k) const noexcept {
  if (a.code == 0) return a;
  const std::uint64_t n = q_ - 1;
  std::uint64_t f = 1;
  for (std::uint32_t i = 0; i < k % h_; ++i) f = f * p_ % n;
  return exp_[std::uint64_t(log_[a.code]) * f % n];
}

Element FieldCtx::from_int(std::int64_t n) const noexcept {
  const auto p = static_cast<std::int64_t>(p_);
  return Element{static_cast<std::uint32_t>(((n % p) + p) % p)};
}

std::vector<std::uint32_t> FieldCtx::coefficients(Element a) const {
  std::vector<std::uint32_t> out(h_, 0);
  std::uint32_t x = a.code;
  for (std::uint32_t i = 0; i < h_; ++i, x /= p_) out[i] = x % p_;
  return out;
}

Element FieldCtx::from_coefficients(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() > h_) throw Error(Errc::invalid_argument, "too many coefficients");
  std::uint32_t out = 0, w = 1;
  for (auto c : coeffs) {
    if (c >= p_) throw Error(Errc::invalid_argument, "coefficient out of range");
    out += c * w;
    w *= p_;
  }
  return Element{out};
}

bool FieldCtx::in_subfield(Element a, std::uint32_t sub_degree) const {
  if (sub_degree == 0 || h_ % sub_degree != 0) {
    throw Error(Errc::degree_mismatch, "subfield degree must divide the extension degree");
  }
  return frobenius(a, sub_degree) == a;
}

Element rel_trace(const FieldCtx& ctx, std::uint32_t e, Element x) {
  if (e == 0 || ctx.degree() % e != 0) {
    throw Error(Errc::degree_mismatch,
                "extension degree " + std::to_string(e) + " does not divide " +
                    std::to_string(ctx.degree()));
  }
  const std::uint32_t step = ctx.degree() / e;
  Element sum = ctx.zero();
  for (std::uint32_t i = 0; i < e; ++i) sum = ctx.add(sum, ctx.frobenius(x, i * step));
  return sum;
}

}  // namespace j4free
