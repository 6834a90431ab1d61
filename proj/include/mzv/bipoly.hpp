#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "mzv/ratfunc.hpp"

namespace mzv {

/// Dense rows of t-polynomials indexed by T-exponent; the numerator layout
/// used for bulk bivariate arithmetic.
using BiRows = std::vector<Poly>;

/// Polynomial in T with coefficients in F_q(t).
///
/// Stored as a common monic denominator in t over sparse numerators
/// (T-exponent, Poly), with gcd(den, all numerators) = 1. That form is
/// canonical, so equality is structural; `coefficient(e)` gives the reduced
/// F_q(t) coefficient of T^e.
class BiPoly {
 public:
  BiPoly() = default;
  explicit BiPoly(Field f) : den_(Poly::one(f)) {}
  static BiPoly constant(const RatFunc& c);
  static BiPoly T(Field f);
  static BiPoly from_terms(Field f, const std::vector<std::pair<std::uint64_t, RatFunc>>& terms);
  /// Normalizes sum_e nums[e] T^e / den.
  static BiPoly from_numerators(Poly den, std::vector<std::pair<std::uint64_t, Poly>> nums);
  static BiPoly from_rows(Poly den, const BiRows& rows);

  const Field& field() const noexcept { return den_.field(); }
  const Poly& den() const noexcept { return den_; }
  const std::vector<std::pair<std::uint64_t, Poly>>& numerators() const noexcept { return nums_; }
  bool is_zero() const noexcept { return nums_.empty(); }
  /// -1 for zero.
  std::int64_t degree_T() const noexcept { return nums_.empty() ? -1 : static_cast<std::int64_t>(nums_.back().first); }
  /// Largest t-degree among the numerators.
  std::int64_t max_num_degree() const noexcept;
  RatFunc coefficient(std::uint64_t e) const;
  std::vector<std::pair<std::uint64_t, RatFunc>> terms() const;

  /// Numerators scaled to the (multiple) denominator `target`, laid out densely.
  BiRows rows_over(const Poly& target) const;

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  BiPoly operator-() const;
  BiPoly scaled(const RatFunc& c) const;

  /// Substitutes T = t^{q^d}; throws ExponentOverflow when q^d is too large.
  RatFunc eval_T(std::uint64_t d) const;
  /// Substitutes T = t^m.
  RatFunc eval_T_monomial(std::uint64_t m) const;
  /// Substitutes an arbitrary T = tau by Horner's rule.
  RatFunc eval(const RatFunc& tau) const;
  /// T -> T^m.
  BiPoly compose_T_power(std::uint64_t m) const;

  friend bool operator==(const BiPoly& a, const BiPoly& b) noexcept {
    return a.den_ == b.den_ && a.nums_ == b.nums_;
  }

 private:
  Poly den_;
  std::vector<std::pair<std::uint64_t, Poly>> nums_;
};

/// The operation named in the interface: evaluation of h at T = t^{q^d}.
inline RatFunc bipoly_eval_T(const BiPoly& h, std::uint64_t d) { return h.eval_T(d); }

namespace detail {
/// Product of dense bivariate numerators via one Kronecker substitution.
BiRows mul_rows(const FieldCtx& F, const BiRows& a, const BiRows& b);
/// acc += c * a (c a t-polynomial).
void add_rows(BiRows& acc, const BiRows& a, const Poly& c);
/// acc += s * a for a scalar s.
void add_rows_scalar(BiRows& acc, const BiRows& a, FieldElem s);
bool rows_zero(const BiRows& a);
/// q^d, or throws ExponentOverflow.
std::uint64_t q_power(std::uint64_t q, std::uint64_t d);
}  // namespace detail

}  // namespace mzv
