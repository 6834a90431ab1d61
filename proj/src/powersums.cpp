#include "mzv/powersums.hpp"

#include <algorithm>

namespace mzv {

void CarlitzCache::extend(std::uint32_t n) const {
  const FieldCtx& F = *f_;
  const std::uint64_t q = F.q();
  if (bracket_.empty()) {
    bracket_.emplace_back(f_);
    D_.push_back(Poly::one(f_));
    L_.push_back(Poly::one(f_));
    e_.push_back({Poly::one(f_)});
  }
  while (bracket_.size() <= n) {
    const std::uint32_t m = static_cast<std::uint32_t>(bracket_.size());
    std::uint64_t qm = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
      if (qm > kMaxDegree / q) throw Error(Errc::ExponentOverflow, "q^n exceeds the exponent bound");
      qm *= q;
    }
    Poly br = Poly::monomial(f_, F.one(), qm) - Poly::t(f_);
    Poly Dm = br * D_[m - 1].pow(q);
    Poly Lm = br * L_[m - 1];
    // e_m = e_{m-1}^q - D_{m-1}^{q-1} e_{m-1}
    const std::vector<Poly>& prev = e_[m - 1];
    const Poly Dq1 = D_[m - 1].pow(q - 1);
    std::vector<Poly> next(m + 1, Poly(f_));
    for (std::uint32_t i = 0; i <= m; ++i) {
      if (i >= 1) next[i] += prev[i - 1].inflated(q);
      if (i < prev.size()) next[i] -= Dq1 * prev[i];
    }
    bracket_.push_back(std::move(br));
    D_.push_back(std::move(Dm));
    L_.push_back(std::move(Lm));
    e_.push_back(std::move(next));
  }
}

Poly CarlitzCache::bracket(std::uint32_t n) const {
  if (n == 0) throw Error(Errc::InvalidIndex, "[0] is undefined");
  std::lock_guard lk(mu_);
  extend(n);
  return bracket_[n];
}

Poly CarlitzCache::D(std::uint32_t n) const {
  std::lock_guard lk(mu_);
  extend(n);
  return D_[n];
}

Poly CarlitzCache::L(std::uint32_t n) const {
  std::lock_guard lk(mu_);
  extend(n);
  return L_[n];
}

Poly CarlitzCache::ell(std::uint32_t n) const {
  Poly l = L(n);
  return n % 2 == 0 ? l : -l;
}

std::vector<Poly> CarlitzCache::e_coeffs(std::uint32_t d) const {
  std::lock_guard lk(mu_);
  extend(d);
  return e_[d];
}

Poly CarlitzCache::e_eval(std::uint32_t d, const Poly& x) const {
  const std::vector<Poly> a = e_coeffs(d);
  Poly acc(f_);
  std::uint64_t qi = 1;
  for (const Poly& c : a) {
    acc += c * x.inflated(qi);
    qi *= f_->q();
  }
  return acc;
}

Poly CarlitzCache::rad_ell(std::uint32_t d) const {
  {
    std::lock_guard lk(mu_);
    if (auto it = rad_.find(d); it != rad_.end()) return it->second;
  }
  Poly r = Poly::one(f_);
  for (std::uint32_t i = 1; i <= d; ++i) r = lcm(r, bracket(i));
  std::lock_guard lk(mu_);
  rad_.emplace(d, r);
  return r;
}

Poly CarlitzCache::ell_ratio(std::uint32_t d, std::uint32_t e) const {
  if (e > d) throw Error(Errc::InvalidIndex, "ell ratio needs e <= d");
  Poly r = Poly::one(f_);
  for (std::uint32_t i = e + 1; i <= d; ++i) r *= -bracket(i);
  return r;
}

PowerSums::PowerSums(Field f) : f_(f), carlitz_(std::move(f)) {}

SpecialPolys PowerSums::special_polys(std::uint32_t n) const {
  SpecialPolys s;
  s.bracket = n == 0 ? Poly(f_) : carlitz_.bracket(n);
  s.D = carlitz_.D(n);
  s.L = carlitz_.L(n);
  s.ell = carlitz_.ell(n);
  return s;
}

Poly PowerSums::scaled_sum(std::uint32_t d, std::int64_t k) const {
  if (k < 1) throw Error(Errc::InvalidIndex, "power sums need k >= 1");
  if (d == 0) return Poly::one(f_);
  std::lock_guard lk(mu_);
  std::vector<Poly>& u = scaled_[d];
  if (static_cast<std::int64_t>(u.size()) >= k) return u[static_cast<std::size_t>(k - 1)];

  const std::uint64_t q = f_->q();
  const std::size_t want = std::max<std::size_t>(static_cast<std::size_t>(k), 2 * u.size());
  const std::vector<Poly> a = carlitz_.e_coeffs(d);
  const Poly Dd = carlitz_.D(d);
  const Poly ld = carlitz_.ell(d);
  // w_i = a_{d,i} l_d^{q^i} for the i >= 1 with q^i < want
  std::vector<std::pair<std::size_t, Poly>> w;
  for (std::uint64_t i = 1, qi = q; i <= d && qi < want; ++i, qi *= q) {
    w.emplace_back(qi, a[i] * ld.inflated(qi));
  }
  if (u.empty()) u.push_back(Poly::one(f_));
  u.reserve(want);
  while (u.size() < want) {
    const std::size_t m = u.size();
    Poly acc(f_);
    for (const auto& [qi, wi] : w) {
      if (qi > m) break;
      acc += wi * u[m - qi];
    }
    Poly next = u[m - 1];
    if (!acc.is_zero()) next += acc.exact_div(Dd);
    u.push_back(std::move(next));
  }
  return u[static_cast<std::size_t>(k - 1)];
}

Poly PowerSums::scaled_less(std::uint32_t d, std::int64_t k) const {
  if (k < 1) throw Error(Errc::InvalidIndex, "power sums need k >= 1");
  if (d == 0) return Poly(f_);
  {
    std::lock_guard lk(mu_);
    if (auto it = less_.find({d, k}); it != less_.end()) return it->second;
  }
  Poly acc(f_);
  for (std::uint32_t e = 0; e < d; ++e) {
    acc += carlitz_.ell_ratio(d, e).pow(static_cast<std::uint64_t>(k)) * scaled_sum(e, k);
  }
  std::lock_guard lk(mu_);
  less_.emplace(std::make_pair(d, k), acc);
  return acc;
}

RatFunc PowerSums::unscale(const Poly& P, std::uint32_t d, std::int64_t k) const {
  if (P.is_zero()) return RatFunc(f_);
  if (d == 0) return RatFunc(P);
  const Poly R = carlitz_.rad_ell(d);
  Poly num = P;
  Poly den = carlitz_.ell(d).pow(static_cast<std::uint64_t>(k));
  for (;;) {
    Poly g = gcd(num % R, R);
    if (g.is_one()) break;
    num = num.exact_div(g);
    den = den.exact_div(g);
  }
  const FieldElem c = den.lead();
  if (c.v != 1) {
    const FieldElem ci = f_->inv(c);
    num = num.scaled(ci);
    den = den.scaled(ci);
  }
  return RatFunc::from_reduced(std::move(num), std::move(den));
}

RatFunc PowerSums::power_sum(std::uint32_t d, std::int64_t k) const {
  return unscale(scaled_sum(d, k), d, k);
}

RatFunc PowerSums::power_sum_oracle(std::uint32_t d, std::int64_t k) const {
  if (k < 1) throw Error(Errc::InvalidIndex, "power sums need k >= 1");
  const std::uint64_t q = f_->q();
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < d; ++i) {
    count *= q;
    if (count > 100000) throw Error(Errc::TooLarge, "enumeration over more than 10^5 monics");
  }
  // L_d is the lcm of the monics of degree d, so every L_d / a is exact
  const Poly Ld = carlitz_.L(d);
  Poly acc(f_);
  std::vector<FieldElem> c(d + 1);
  c[d] = f_->one();
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::uint64_t x = idx;
    for (std::uint32_t j = 0; j < d; ++j) {
      c[j] = FieldElem{static_cast<std::uint32_t>(x % q)};
      x /= q;
    }
    const Poly a(f_, c);
    acc += Ld.exact_div(a).pow(static_cast<std::uint64_t>(k));
  }
  return rat_normalize(std::move(acc), Ld.pow(static_cast<std::uint64_t>(k)));
}

RatFunc PowerSums::power_sum_less(std::uint32_t d, std::int64_t k) const {
  RatFunc acc(f_);
  for (std::uint32_t e = 0; e < d; ++e) acc += power_sum(e, k);
  return acc;
}

RatFunc PowerSums::power_sum_double(std::uint32_t d, std::int64_t s1, std::int64_t s2) const {
  if (d == 0) return RatFunc(f_);
  return power_sum(d, s1) * power_sum_less(d, s2);
}

RatFunc PowerSums::delta(std::uint32_t d, std::int64_t a, std::int64_t b) const {
  return power_sum(d, a) * power_sum(d, b) - power_sum(d, checked_add(a, b));
}

RatFunc PowerSums::zeta_trunc(const std::vector<std::int64_t>& s, std::uint32_t D) const {
  if (s.empty() || s.size() > 4) throw Error(Errc::InvalidArgument, "zeta depth must be 1..4");
  for (auto x : s) {
    if (x < 1) throw Error(Errc::InvalidIndex, "zeta arguments must be positive");
  }
  // inner[d] = sum over chains of the trailing arguments whose top degree is d
  std::vector<RatFunc> inner(D + 1, RatFunc(f_));
  for (std::uint32_t d = 0; d <= D; ++d) inner[d] = power_sum(d, s.back());
  for (std::size_t r = s.size() - 1; r-- > 0;) {
    std::vector<RatFunc> outer(D + 1, RatFunc(f_));
    RatFunc below(f_);
    for (std::uint32_t d = 0; d <= D; ++d) {
      if (!below.is_zero()) outer[d] = power_sum(d, s[r]) * below;
      below += inner[d];
    }
    inner = std::move(outer);
  }
  RatFunc acc(f_);
  for (const auto& v : inner) acc += v;
  return acc;
}

PowerSums::ClosedForm PowerSums::closed_form_Sd(std::int64_t m, std::uint32_t i, std::uint32_t d) const {
  const std::int64_t q = f_->q();
  if (m < 2 || m > q) throw Error(Errc::InvalidArgument, "closed form needs 2 <= m <= q");
  const std::int64_t k = checked_mul(m, ipow(q, i)) - 1;
  ClosedForm r{false, power_sum(d, k), RatFunc(f_)};
  r.rhs = rat_normalize(carlitz_.ell(d + i),
                        carlitz_.ell(i) * carlitz_.ell(d).pow(static_cast<std::uint64_t>(k + 1)));
  r.equal = r.lhs == r.rhs;
  return r;
}

}  // namespace mzv
