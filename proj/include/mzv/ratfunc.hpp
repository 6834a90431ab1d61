#pragma once

#include "mzv/poly.hpp"

namespace mzv {

/// Element of F_q(t) in canonical form: gcd(num, den) = 1 and den monic,
/// so equality is structural.
class RatFunc {
 public:
  RatFunc() = default;
  explicit RatFunc(Field f) : num_(f), den_(Poly::one(f)) {}
  RatFunc(Poly num);  // NOLINT(google-explicit-constructor): polynomials embed
  static RatFunc one(Field f) { return RatFunc(Poly::one(std::move(f))); }
  static RatFunc from_elem(Field f, FieldElem c) { return RatFunc(Poly::constant(std::move(f), c)); }

  /// Trusted constructor for callers that already hold a reduced pair.
  static RatFunc from_reduced(Poly num, Poly den);

  const Poly& num() const noexcept { return num_; }
  const Poly& den() const noexcept { return den_; }
  const Field& field() const noexcept { return den_.field(); }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const noexcept { return den_.is_one(); }

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  RatFunc operator-() const;

  RatFunc inverse() const;
  RatFunc scaled(FieldElem c) const;
  /// Negative exponents invert first.
  RatFunc pow(std::int64_t e) const;
  /// f(t^m).
  RatFunc inflated(std::uint64_t m) const;

  friend bool operator==(const RatFunc& a, const RatFunc& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  friend RatFunc rat_normalize(Poly num, Poly den);
  Poly num_, den_;
};

/// Reduced, monic-denominator form of num/den; throws ZeroDenominator.
RatFunc rat_normalize(Poly num, Poly den);

}  // namespace mzv
