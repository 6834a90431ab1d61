#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "mzv/ffield.hpp"

namespace mzv {

/// Largest degree a materialized polynomial may reach (ExponentOverflow beyond).
inline constexpr std::uint64_t kMaxDegree = std::uint64_t{1} << 26;

/// Univariate polynomial in t over F_q.
///
/// Storage is dense (coefficient i of t^i, no trailing zeros): every polynomial
/// this library manipulates in bulk (power-sum numerators, H/G coefficients)
/// is dense in t, and dense storage lets multiplication go through Kronecker
/// substitution. `terms()` gives the sparse (exponent, coefficient) view.
class Poly {
 public:
  Poly() = default;
  explicit Poly(Field f) : f_(std::move(f)) {}
  Poly(Field f, std::vector<FieldElem> coeffs);

  static Poly constant(Field f, FieldElem c);
  static Poly monomial(Field f, FieldElem c, std::uint64_t e);
  static Poly one(Field f) { return constant(f, FieldElem{1}); }
  static Poly t(Field f) { return monomial(f, FieldElem{1}, 1); }
  /// Integer coefficients (reduced into F_p), constant term first.
  static Poly from_ints(Field f, std::initializer_list<std::int64_t> coeffs);

  const Field& field() const noexcept { return f_; }
  const FieldCtx& ctx() const noexcept { return *f_; }

  /// -1 for the zero polynomial.
  std::int64_t degree() const noexcept { return static_cast<std::int64_t>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_one() const noexcept { return c_.size() == 1 && c_[0].v == 1; }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  std::size_t size() const noexcept { return c_.size(); }
  FieldElem coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : FieldElem{}; }
  FieldElem lead() const noexcept { return c_.empty() ? FieldElem{} : c_.back(); }
  std::span<const FieldElem> coeffs() const noexcept { return c_; }
  std::vector<std::pair<std::uint64_t, FieldElem>> terms() const;
  /// Lowest exponent with a nonzero coefficient; 0 for the zero polynomial.
  std::uint64_t valuation() const noexcept;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;

  /// this += c * t^shift * o, the workhorse of every recurrence here.
  void add_scaled(const Poly& o, FieldElem c, std::uint64_t shift = 0);

  Poly scaled(FieldElem c) const;
  /// Multiplication by t^s.
  Poly shifted(std::uint64_t s) const;
  /// f(t^m).
  Poly inflated(std::uint64_t m) const;
  Poly pow(std::uint64_t e) const;
  Poly monic() const;
  Poly derivative() const;
  FieldElem eval(FieldElem x) const noexcept;

  /// Quotient and remainder; throws ZeroDenominator on a zero divisor.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  Poly operator/(const Poly& b) const { return divmod(*this, b).first; }
  Poly operator%(const Poly& b) const;
  /// Division that must be exact; throws InvalidArgument otherwise.
  Poly exact_div(const Poly& b) const;
  bool divisible_by(const Poly& b) const { return (*this % b).is_zero(); }

  friend bool operator==(const Poly& a, const Poly& b) noexcept { return a.c_ == b.c_; }

 private:
  void trim() noexcept;
  void check_same(const Poly& o) const;

  Field f_;
  std::vector<FieldElem> c_;
};

/// Monic gcd (zero when both are zero).
Poly gcd(Poly a, Poly b);
Poly lcm(const Poly& a, const Poly& b);

namespace detail {
/// Product of dense coefficient vectors; schoolbook for short inputs,
/// Kronecker substitution through GMP otherwise.
std::vector<FieldElem> mul_dense(const FieldCtx& F, std::span<const FieldElem> a,
                                 std::span<const FieldElem> b);
std::vector<FieldElem> mul_schoolbook(const FieldCtx& F, std::span<const FieldElem> a,
                                      std::span<const FieldElem> b);
void check_degree(std::uint64_t deg);
}  // namespace detail

}  // namespace mzv
