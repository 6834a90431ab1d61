#include "mzv/series.hpp"

#include <algorithm>

namespace mzv {

Series::Series(Field f, std::size_t order) : f_(std::move(f)), c_(order, RatFunc(f_)) {}

Series::Series(std::vector<RatFunc> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) throw Error(Errc::InvalidArgument, "series of order zero needs an explicit field");
  f_ = c_.front().field();
}

Series& Series::operator+=(const Series& o) {
  const std::size_t w = std::min(order(), o.order());
  c_.resize(w);
  for (std::size_t i = 0; i < w; ++i) c_[i] += o.c_[i];
  return *this;
}

Series& Series::operator-=(const Series& o) {
  const std::size_t w = std::min(order(), o.order());
  c_.resize(w);
  for (std::size_t i = 0; i < w; ++i) c_[i] -= o.c_[i];
  return *this;
}

Series operator*(const Series& a, const Series& b) {
  const std::size_t w = std::min(a.order(), b.order());
  Series r(a.f_, w);
  for (std::size_t i = 0; i < w; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < w; ++j) {
      if (b.c_[j].is_zero()) continue;
      r.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return r;
}

Series series_inverse(const Series& s) {
  const std::size_t w = s.order();
  if (w == 0) return s;
  if (s[0].is_zero()) throw Error(Errc::NonUnitConstantTerm, "series with zero constant term is not invertible");
  // inv_m = -(1/s_0) * sum_{j>=1} s_j inv_{m-j}; the sum only visits nonzero s_j,
  // which keeps sparse inputs (the Carlitz series has terms at y^{q^i} only) cheap
  std::vector<std::size_t> support;
  for (std::size_t j = 1; j < w; ++j) {
    if (!s[j].is_zero()) support.push_back(j);
  }
  const RatFunc neg_inv0 = -s[0].inverse();
  Series r(s.field(), w);
  r[0] = s[0].inverse();
  for (std::size_t m = 1; m < w; ++m) {
    RatFunc acc(s.field());
    for (std::size_t j : support) {
      if (j > m) break;
      if (r[m - j].is_zero()) continue;
      acc += s[j] * r[m - j];
    }
    r[m] = acc.is_zero() ? acc : acc * neg_inv0;
  }
  return r;
}

}  // namespace mzv
