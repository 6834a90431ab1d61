#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mzv/error.hpp"

namespace mzv {

/// An element of F_q, stored as the integer whose base-p digits are its
/// coordinates in the power basis of the field modulus (constant coordinate
/// least significant). Codes below p are exactly the prime subfield.
struct FieldElem {
  std::uint32_t v = 0;

  constexpr bool is_zero() const noexcept { return v == 0; }
  friend constexpr auto operator<=>(FieldElem, FieldElem) = default;
};

class FieldCtx;
using Field = std::shared_ptr<const FieldCtx>;

/// F_q with q = p^n, arithmetic through precomputed tables.
class FieldCtx {
 public:
  static constexpr std::uint32_t kMaxOrder = 1024;

  /// Builds F_{p^n}. Without an explicit modulus the canonical one is used:
  /// the monic irreducible of degree n whose coefficient list, read as a
  /// base-p integer with the constant term least significant, is smallest.
  static Field create(std::uint32_t p, std::uint32_t n,
                      std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t n() const noexcept { return n_; }
  std::uint32_t q() const noexcept { return q_; }
  bool is_prime() const noexcept { return n_ == 1; }
  /// Coefficients of the modulus, constant term first, length n+1 (monic).
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
  /// Base-p integer reading of the modulus (used as a cache key).
  std::uint64_t modulus_code() const noexcept;

  FieldElem zero() const noexcept { return {0}; }
  FieldElem one() const noexcept { return {1}; }
  /// Image of an integer in the prime subfield.
  FieldElem from_int(std::int64_t x) const noexcept;
  FieldElem from_coords(std::span<const std::uint32_t> coords) const;
  std::vector<std::uint32_t> coords(FieldElem x) const;
  std::uint32_t coord(FieldElem x, std::uint32_t i) const noexcept { return coord_[x.v * n_ + i]; }
  bool in_prime_field(FieldElem x) const noexcept { return x.v < p_; }

  FieldElem add(FieldElem a, FieldElem b) const noexcept { return {add_[a.v * q_ + b.v]}; }
  FieldElem sub(FieldElem a, FieldElem b) const noexcept { return add(a, neg(b)); }
  FieldElem mul(FieldElem a, FieldElem b) const noexcept { return {mul_[a.v * q_ + b.v]}; }
  FieldElem neg(FieldElem a) const noexcept { return {neg_[a.v]}; }
  /// Throws ZeroDenominator on zero.
  FieldElem inv(FieldElem a) const;
  FieldElem div(FieldElem a, FieldElem b) const { return mul(a, inv(b)); }
  FieldElem pow(FieldElem a, std::uint64_t e) const noexcept;
  FieldElem frobenius(FieldElem a) const noexcept { return pow(a, p_); }

  /// All q elements in code order.
  std::vector<FieldElem> elements() const;

 private:
  FieldCtx() = default;
  void build_tables();

  std::uint32_t p_ = 2, n_ = 1, q_ = 2;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint16_t> add_, mul_, neg_, inv_;
  std::vector<std::uint16_t> coord_;
};

/// Irreducibility of a monic polynomial over F_p (coefficients constant first),
/// by trial division with every monic polynomial of degree at most half.
bool is_irreducible_mod_p(std::span<const std::uint32_t> f, std::uint32_t p);

bool is_prime(std::uint64_t n) noexcept;

/// Base-p digits, least significant first; 0 gives the empty sequence.
std::vector<std::uint32_t> base_p_digits(std::int64_t m, std::uint32_t p);

/// C(n, k) mod p through Lucas' theorem; zero whenever k > n.
std::uint32_t lucas_binom(std::int64_t n, std::int64_t k, std::uint32_t p);

/// True iff adding x and y in base p produces a carry.
bool has_carry(std::int64_t x, std::int64_t y, std::uint32_t p);

/// Checked integer helpers (desk-scale indices stay far below 2^63).
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t ipow(std::int64_t base, std::uint32_t e);

/// Exact binomial coefficient over Z; throws Overflow past 2^63.
std::int64_t binom_exact(std::int64_t n, std::int64_t k);

}  // namespace mzv
