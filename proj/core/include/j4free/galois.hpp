#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace j4free {

/// An element of GF(p^h), encoded as the integer sum c_i * p^i of its
/// coefficient vector over GF(p) in the polynomial basis 1, x, ..., x^(h-1).
struct Element {
  std::uint32_t code = 0;

  friend constexpr auto operator<=>(const Element&, const Element&) = default;
};

/// Arithmetic context for GF(p^h).
///
/// The field is realized as GF(p)[x]/(f) where f is the first monic
/// polynomial of degree h (ordered by its lower coefficients read as a base-p
/// number) for which the residue class of x has multiplicative order p^h - 1.
/// The residue of x is therefore a primitive element and the exp/log tables
/// are indexed by its powers. Immutable after creation.
class FieldCtx {
 public:
  /// Largest supported field order; tables hold one entry per element.
  static constexpr std::uint64_t kTableBound = std::uint64_t{1} << 24;

  /// Builds and validates GF(p^h). Throws Errc::not_prime,
  /// Errc::table_overflow or Errc::no_irreducible_polynomial.
  static FieldCtx create(std::uint32_t p, std::uint32_t h);

  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return h_; }
  std::uint32_t order() const noexcept { return q_; }

  /// Modulus coefficients c_0..c_h (monic, so c_h = 1).
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  /// exp_table()[i] = alpha^i for i in 0..q-2.
  const std::vector<Element>& exp_table() const noexcept { return exp_; }

  Element zero() const noexcept { return Element{0}; }
  Element one() const noexcept { return Element{1}; }
  Element primitive() const noexcept { return exp_.size() > 1 ? exp_[1] : exp_[0]; }

  /// alpha^(i mod (q-1)).
  Element exp(std::uint64_t i) const noexcept { return exp_[i % (q_ - 1)]; }

  /// Discrete log to base alpha; throws Errc::invalid_argument for zero.
  std::uint32_t log(Element a) const;

  bool is_valid(Element a) const noexcept { return a.code < q_; }

  Element add(Element a, Element b) const noexcept;
  Element sub(Element a, Element b) const noexcept;
  Element neg(Element a) const noexcept;
  Element mul(Element a, Element b) const noexcept;
  Element inv(Element a) const;
  Element div(Element a, Element b) const;
  Element pow(Element a, std::uint64_t e) const noexcept;

  /// a^(p^k).
  Element frobenius(Element a, std::uint32_t k = 1) const noexcept;

  /// Image of the integer n in the prime subfield.
  Element from_int(std::int64_t n) const noexcept;

  std::vector<std::uint32_t> coefficients(Element a) const;
  Element from_coefficients(std::span<const std::uint32_t> coeffs) const;

  /// True iff a lies in the subfield GF(p^sub_degree); sub_degree must divide h.
  bool in_subfield(Element a, std::uint32_t sub_degree) const;

 private:
  FieldCtx() = default;

  std::uint32_t p_ = 0;
  std::uint32_t h_ = 0;
  std::uint32_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<Element> exp_;
  std::vector<std::int32_t> log_;
};

/// Relative trace x + x^q + ... + x^(q^(e-1)) of GF(q^e) over GF(q), where
/// ctx has order q^e. Throws Errc::degree_mismatch when e does not divide h.
Element rel_trace(const FieldCtx& ctx, std::uint32_t e, Element x);

/// Rabin irreducibility test over GF(p); coeffs are c_0..c_n with c_n != 0.
bool is_irreducible(std::span<const std::uint32_t> coeffs, std::uint32_t p);

}  // namespace j4free
