#include "mzv/bipoly.hpp"

#include <algorithm>
#include <map>

namespace mzv {

namespace detail {

BiRows mul_rows(const FieldCtx& F, const BiRows& a, const BiRows& b) {
  if (a.empty() || b.empty()) return {};
  const Field& f = !a.front().field() ? b.front().field() : a.front().field();
  std::size_t la = 0, lb = 0;
  for (const auto& r : a) la = std::max(la, r.size());
  for (const auto& r : b) lb = std::max(lb, r.size());
  if (la == 0 || lb == 0) return {};
  const std::size_t stride = la + lb - 1;
  check_degree(stride * (a.size() + b.size()));
  auto pack = [&](const BiRows& x) {
    std::vector<FieldElem> v((x.size() - 1) * stride + std::max<std::size_t>(x.back().size(), 1));
    for (std::size_t e = 0; e < x.size(); ++e) {
      auto c = x[e].coeffs();
      std::copy(c.begin(), c.end(), v.begin() + static_cast<std::ptrdiff_t>(e * stride));
    }
    return v;
  };
  const std::vector<FieldElem> pa = pack(a);
  const std::vector<FieldElem> prod = (&a == &b) ? mul_dense(F, pa, pa) : mul_dense(F, pa, pack(b));
  BiRows out(a.size() + b.size() - 1, Poly(f));
  for (std::size_t e = 0; e < out.size(); ++e) {
    const std::size_t lo = e * stride;
    if (lo >= prod.size()) break;
    const std::size_t hi = std::min(prod.size(), lo + stride);
    out[e] = Poly(f, std::vector<FieldElem>(prod.begin() + static_cast<std::ptrdiff_t>(lo),
                                            prod.begin() + static_cast<std::ptrdiff_t>(hi)));
  }
  while (!out.empty() && out.back().is_zero()) out.pop_back();
  return out;
}

void add_rows(BiRows& acc, const BiRows& a, const Poly& c) {
  if (c.is_zero()) return;
  if (acc.size() < a.size()) acc.resize(a.size(), Poly(c.field()));
  for (std::size_t e = 0; e < a.size(); ++e) {
    if (a[e].is_zero()) continue;
    if (c.is_constant()) {
      acc[e].add_scaled(a[e], c.coeff(0));
    } else {
      acc[e] += a[e] * c;
    }
  }
}

void add_rows_scalar(BiRows& acc, const BiRows& a, FieldElem s) {
  if (s.is_zero() || a.empty()) return;
  if (acc.size() < a.size()) acc.resize(a.size(), Poly(a.front().field()));
  for (std::size_t e = 0; e < a.size(); ++e) {
    if (!a[e].is_zero()) acc[e].add_scaled(a[e], s);
  }
}

bool rows_zero(const BiRows& a) {
  return std::all_of(a.begin(), a.end(), [](const Poly& p) { return p.is_zero(); });
}

std::uint64_t q_power(std::uint64_t q, std::uint64_t d) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < d; ++i) {
    if (r > kMaxDegree / q) throw Error(Errc::ExponentOverflow, "q^d exceeds the exponent bound");
    r *= q;
  }
  return r;
}

}  // namespace detail

BiPoly BiPoly::constant(const RatFunc& c) {
  BiPoly r(c.field());
  if (c.is_zero()) return r;
  r.den_ = c.den();
  r.nums_.emplace_back(0, c.num());
  return r;
}

BiPoly BiPoly::T(Field f) {
  BiPoly r(f);
  r.nums_.emplace_back(1, Poly::one(f));
  return r;
}

BiPoly BiPoly::from_terms(Field f, const std::vector<std::pair<std::uint64_t, RatFunc>>& terms) {
  Poly den = Poly::one(f);
  for (const auto& [e, c] : terms) {
    if (!c.is_zero()) den = lcm(den, c.den());
  }
  std::vector<std::pair<std::uint64_t, Poly>> nums;
  for (const auto& [e, c] : terms) {
    if (c.is_zero()) continue;
    nums.emplace_back(e, c.num() * den.exact_div(c.den()));
  }
  return from_numerators(std::move(den), std::move(nums));
}

BiPoly BiPoly::from_numerators(Poly den, std::vector<std::pair<std::uint64_t, Poly>> nums) {
  if (den.is_zero()) throw Error(Errc::ZeroDenominator, "bivariate polynomial with zero denominator");
  const Field f = den.field();
  std::sort(nums.begin(), nums.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  // merge equal exponents, drop zeros
  std::vector<std::pair<std::uint64_t, Poly>> merged;
  for (auto& [e, p] : nums) {
    if (!merged.empty() && merged.back().first == e) {
      merged.back().second += p;
    } else {
      merged.emplace_back(e, std::move(p));
    }
  }
  std::erase_if(merged, [](const auto& x) { return x.second.is_zero(); });

  BiPoly r(f);
  if (merged.empty()) return r;
  Poly g = den.monic();
  for (const auto& [e, p] : merged) {
    if (g.is_one()) break;
    g = gcd(g, p);
  }
  if (!g.is_one()) {
    den = den.exact_div(g);
    for (auto& [e, p] : merged) p = p.exact_div(g);
  }
  const FieldElem lc = den.lead();
  if (lc.v != 1) {
    const FieldElem ci = f->inv(lc);
    den = den.scaled(ci);
    for (auto& [e, p] : merged) p = p.scaled(ci);
  }
  r.den_ = std::move(den);
  r.nums_ = std::move(merged);
  return r;
}

BiPoly BiPoly::from_rows(Poly den, const BiRows& rows) {
  std::vector<std::pair<std::uint64_t, Poly>> nums;
  for (std::size_t e = 0; e < rows.size(); ++e) {
    if (!rows[e].is_zero()) nums.emplace_back(e, rows[e]);
  }
  return from_numerators(std::move(den), std::move(nums));
}

std::int64_t BiPoly::max_num_degree() const noexcept {
  std::int64_t m = -1;
  for (const auto& [e, p] : nums_) m = std::max(m, p.degree());
  return m;
}

RatFunc BiPoly::coefficient(std::uint64_t e) const {
  auto it = std::lower_bound(nums_.begin(), nums_.end(), e, [](const auto& x, std::uint64_t k) { return x.first < k; });
  if (it == nums_.end() || it->first != e) return RatFunc(field());
  return rat_normalize(it->second, den_);
}

std::vector<std::pair<std::uint64_t, RatFunc>> BiPoly::terms() const {
  std::vector<std::pair<std::uint64_t, RatFunc>> out;
  out.reserve(nums_.size());
  for (const auto& [e, p] : nums_) out.emplace_back(e, rat_normalize(p, den_));
  return out;
}

BiRows BiPoly::rows_over(const Poly& target) const {
  const Poly factor = target.exact_div(den_);
  BiRows rows(nums_.empty() ? 0 : nums_.back().first + 1, Poly(field()));
  for (const auto& [e, p] : nums_) rows[e] = factor.is_one() ? p : p * factor;
  return rows;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  Poly den = lcm(den_, o.den_);
  const Poly f1 = den.exact_div(den_), f2 = den.exact_div(o.den_);
  std::vector<std::pair<std::uint64_t, Poly>> nums;
  nums.reserve(nums_.size() + o.nums_.size());
  for (const auto& [e, p] : nums_) nums.emplace_back(e, f1.is_one() ? p : p * f1);
  for (const auto& [e, p] : o.nums_) nums.emplace_back(e, f2.is_one() ? p : p * f2);
  return *this = from_numerators(std::move(den), std::move(nums));
}

BiPoly& BiPoly::operator-=(const BiPoly& o) { return *this += -o; }

BiPoly BiPoly::operator-() const {
  BiPoly r = *this;
  for (auto& [e, p] : r.nums_) p = -p;
  return r;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() || b.is_zero()) return BiPoly(a.field() ? a.field() : b.field());
  const BiRows prod = detail::mul_rows(*a.field(), a.rows_over(a.den_), b.rows_over(b.den_));
  return BiPoly::from_rows(a.den_ * b.den_, prod);
}

BiPoly BiPoly::scaled(const RatFunc& c) const {
  if (c.is_zero() || is_zero()) return BiPoly(field());
  std::vector<std::pair<std::uint64_t, Poly>> nums;
  for (const auto& [e, p] : nums_) nums.emplace_back(e, p * c.num());
  return from_numerators(den_ * c.den(), std::move(nums));
}

RatFunc BiPoly::eval_T_monomial(std::uint64_t m) const {
  if (is_zero()) return RatFunc(field());
  if (m > 0 && nums_.back().first > kMaxDegree / m) {
    throw Error(Errc::ExponentOverflow, "evaluation point degree too large");
  }
  Poly acc(field());
  for (const auto& [e, p] : nums_) acc.add_scaled(p, FieldElem{1}, e * m);
  return rat_normalize(std::move(acc), den_);
}

RatFunc BiPoly::eval_T(std::uint64_t d) const {
  return eval_T_monomial(detail::q_power(field()->q(), d));
}

RatFunc BiPoly::eval(const RatFunc& tau) const {
  if (is_zero()) return RatFunc(field());
  RatFunc acc(field());
  std::uint64_t cur = nums_.back().first;
  for (auto it = nums_.rbegin(); it != nums_.rend(); ++it) {
    while (cur > it->first) {
      acc *= tau;
      --cur;
    }
    acc += RatFunc(it->second);
  }
  for (; cur > 0; --cur) acc *= tau;
  return acc * rat_normalize(Poly::one(field()), den_);
}

BiPoly BiPoly::compose_T_power(std::uint64_t m) const {
  BiPoly r = *this;
  for (auto& [e, p] : r.nums_) e *= m;
  return r;
}

}  // namespace mzv
