#pragma once

#include <vector>

#include "mzv/ratfunc.hpp"

namespace mzv {

/// Truncated power series c_0 + c_1 y + ... + c_{w-1} y^{w-1} over F_q(t).
class Series {
 public:
  Series(Field f, std::size_t order);
  Series(std::vector<RatFunc> coeffs);  // order = coeffs.size()

  std::size_t order() const noexcept { return c_.size(); }
  const RatFunc& operator[](std::size_t i) const { return c_.at(i); }
  RatFunc& operator[](std::size_t i) { return c_.at(i); }
  const std::vector<RatFunc>& coeffs() const noexcept { return c_; }
  const Field& field() const noexcept { return f_; }

  Series& operator+=(const Series& o);
  Series& operator-=(const Series& o);
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  /// Product truncated at min(order(a), order(b)); zero coefficients are skipped.
  friend Series operator*(const Series& a, const Series& b);
  friend bool operator==(const Series& a, const Series& b) { return a.c_ == b.c_; }

 private:
  Field f_;
  std::vector<RatFunc> c_;
};

/// Multiplicative inverse up to the truncation order; throws
/// NonUnitConstantTerm when c_0 = 0.
Series series_inverse(const Series& s);

}  // namespace mzv
