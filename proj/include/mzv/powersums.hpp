#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <tuple>
#include <vector>

#include "mzv/ratfunc.hpp"

namespace mzv {

/// Memoized Carlitz quantities for one field: [n] = t^{q^n} - t, D_n, L_n,
/// l_n = (-1)^n L_n, and the coefficients of e_d(x) = sum_i a_{d,i} x^{q^i}.
class CarlitzCache {
 public:
  explicit CarlitzCache(Field f) : f_(std::move(f)) {}

  const Field& field() const noexcept { return f_; }
  /// [n] for n >= 1; throws InvalidIndex at n = 0.
  Poly bracket(std::uint32_t n) const;
  Poly D(std::uint32_t n) const;
  Poly L(std::uint32_t n) const;
  Poly ell(std::uint32_t n) const;
  /// a_{d,0..d}; a_{d,d} = 1.
  std::vector<Poly> e_coeffs(std::uint32_t d) const;
  /// e_d evaluated at the polynomial x.
  Poly e_eval(std::uint32_t d, const Poly& x) const;
  /// Product of the distinct monic irreducibles of degree <= d.
  Poly rad_ell(std::uint32_t d) const;
  /// l_d / l_e = prod_{i=e+1}^{d} (t - t^{q^i}) for e <= d.
  Poly ell_ratio(std::uint32_t d, std::uint32_t e) const;

 private:
  void extend(std::uint32_t n) const;

  Field f_;
  mutable std::mutex mu_;
  mutable std::vector<Poly> bracket_, D_, L_;
  mutable std::vector<std::vector<Poly>> e_;
  mutable std::map<std::uint32_t, Poly> rad_;
};

struct SpecialPolys {
  Poly bracket;  // zero at n = 0 (undefined there)
  Poly D, L, ell;
};

/// Power sums S_d(k) over monic polynomials of degree d, plus the derived
/// double sums, shuffle defects and truncated zeta values.
///
/// Internally everything is carried in the scaled form P_{d,k} = l_d^k S_d(k),
/// which is a polynomial; it is the coefficient of y^{k-1} in
/// 1 / (1 - sum_i a_{d,i} l_d^{q^i} / D_d * y^{q^i}).
class PowerSums {
 public:
  explicit PowerSums(Field f);

  const Field& field() const noexcept { return f_; }
  const CarlitzCache& carlitz() const noexcept { return carlitz_; }

  SpecialPolys special_polys(std::uint32_t n) const;

  /// l_d^k S_d(k).
  Poly scaled_sum(std::uint32_t d, std::int64_t k) const;
  /// l_d^k S_{<d}(k).
  Poly scaled_less(std::uint32_t d, std::int64_t k) const;

  RatFunc power_sum(std::uint32_t d, std::int64_t k) const;
  /// Literal sum over all monics of degree d; throws TooLarge when q^d > 10^5.
  RatFunc power_sum_oracle(std::uint32_t d, std::int64_t k) const;
  RatFunc power_sum_less(std::uint32_t d, std::int64_t k) const;
  /// S_d(s1, s2) = S_d(s1) S_{<d}(s2).
  RatFunc power_sum_double(std::uint32_t d, std::int64_t s1, std::int64_t s2) const;
  RatFunc delta(std::uint32_t d, std::int64_t a, std::int64_t b) const;
  /// Sum over D >= d_1 > ... > d_r >= 0 of prod S_{d_i}(s_i), r <= 4.
  RatFunc zeta_trunc(const std::vector<std::int64_t>& s, std::uint32_t D) const;

  struct ClosedForm {
    bool equal;
    RatFunc lhs, rhs;
  };
  /// S_d(m q^i - 1) against l_{d+i} / (l_i l_d^{m q^i}).
  ClosedForm closed_form_Sd(std::int64_t m, std::uint32_t i, std::uint32_t d) const;

  /// Reduces P / l_d^k to canonical form without a full-size gcd.
  RatFunc unscale(const Poly& P, std::uint32_t d, std::int64_t k) const;

 private:
  Field f_;
  CarlitzCache carlitz_;
  mutable std::mutex mu_;
  // per d: P_{d,1}, P_{d,2}, ... (index k-1)
  mutable std::map<std::uint32_t, std::vector<Poly>> scaled_;
  mutable std::map<std::pair<std::uint32_t, std::int64_t>, Poly> less_;
};

}  // namespace mzv
