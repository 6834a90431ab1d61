#include "mzv/poly.hpp"

#include <gmp.h>

#include <algorithm>
#include <bit>
#include <string>

namespace mzv {

namespace detail {

void check_degree(std::uint64_t deg) {
  if (deg > kMaxDegree) {
    throw Error(Errc::ExponentOverflow, "degree " + std::to_string(deg) + " exceeds the materialization bound");
  }
}

std::vector<FieldElem> mul_schoolbook(const FieldCtx& F, std::span<const FieldElem> a,
                                      std::span<const FieldElem> b) {
  if (a.empty() || b.empty()) return {};
  const std::size_t la = a.size(), lb = b.size();
  if (F.is_prime()) {
    const std::uint64_t p = F.p();
    std::vector<std::uint64_t> acc(la + lb - 1, 0);
    // (p-1)^2 * 1024 stays far below 2^63 for p <= 1024
    std::size_t pending = 0;
    for (std::size_t i = 0; i < la; ++i) {
      const std::uint64_t ai = a[i].v;
      if (ai == 0) continue;
      for (std::size_t j = 0; j < lb; ++j) acc[i + j] += ai * b[j].v;
      if (++pending == 1024) {
        for (auto& x : acc) x %= p;
        pending = 0;
      }
    }
    std::vector<FieldElem> out(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i) out[i] = {static_cast<std::uint32_t>(acc[i] % p)};
    return out;
  }
  std::vector<FieldElem> out(la + lb - 1);
  for (std::size_t i = 0; i < la; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < lb; ++j) out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
  }
  return out;
}

namespace {

struct Mpz {
  mpz_t z;
  Mpz() { mpz_init(z); }
  ~Mpz() { mpz_clear(z); }
  Mpz(const Mpz&) = delete;
  Mpz& operator=(const Mpz&) = delete;
};

// Packs coordinate j of coefficient i into slot i*slots + j, `bits` bits each.
void pack(const FieldCtx& F, std::span<const FieldElem> a, std::size_t slots, unsigned bits, mpz_t out) {
  const std::uint32_t n = F.n();
  const std::size_t total_bits = a.size() * slots * bits;
  std::vector<std::uint64_t> limbs(total_bits / 64 + 2, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::uint32_t j = 0; j < n; ++j) {
      const std::uint64_t v = F.coord(a[i], j);
      if (v == 0) continue;
      const std::size_t off = (i * slots + j) * bits;
      const std::size_t w = off / 64, sh = off % 64;
      limbs[w] |= v << sh;
      if (sh + bits > 64) limbs[w + 1] |= v >> (64 - sh);
    }
  }
  mpz_import(out, limbs.size(), -1, sizeof(std::uint64_t), 0, 0, limbs.data());
}

}  // namespace

std::vector<FieldElem> mul_dense(const FieldCtx& F, std::span<const FieldElem> a,
                                 std::span<const FieldElem> b) {
  if (a.empty() || b.empty()) return {};
  const std::size_t la = a.size(), lb = b.size();
  check_degree(la + lb - 2);
  if (std::min(la, lb) < 48) return mul_schoolbook(F, a, b);

  const std::uint32_t n = F.n();
  const std::uint64_t p = F.p();
  const std::size_t slots = 2 * n - 1;
  const std::uint64_t bound = static_cast<std::uint64_t>(std::min(la, lb)) * n * (p - 1) * (p - 1);
  const unsigned bits = std::max(1u, static_cast<unsigned>(std::bit_width(bound)));

  Mpz za, zb, zc;
  pack(F, a, slots, bits, za.z);
  if (a.data() == b.data() && la == lb) {
    mpz_mul(zc.z, za.z, za.z);
  } else {
    pack(F, b, slots, bits, zb.z);
    mpz_mul(zc.z, za.z, zb.z);
  }

  const std::size_t out_len = la + lb - 1;
  const std::size_t nlimbs = mpz_size(zc.z);
  std::vector<std::uint64_t> limbs(nlimbs + 2, 0);
  std::size_t written = 0;
  mpz_export(limbs.data(), &written, -1, sizeof(std::uint64_t), 0, 0, zc.z);
  const std::uint64_t mask = bits == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << bits) - 1);
  auto slot = [&](std::size_t s) -> std::uint64_t {
    const std::size_t off = s * bits;
    const std::size_t w = off / 64, sh = off % 64;
    if (w >= limbs.size()) return 0;
    std::uint64_t v = limbs[w] >> sh;
    if (sh + bits > 64 && w + 1 < limbs.size()) v |= limbs[w + 1] << (64 - sh);
    return v & mask;
  };

  std::vector<FieldElem> out(out_len);
  if (n == 1) {
    for (std::size_t i = 0; i < out_len; ++i) out[i] = {static_cast<std::uint32_t>(slot(i) % p)};
    return out;
  }
  const auto& m = F.modulus();
  std::vector<std::int64_t> v(slots);
  std::vector<std::uint32_t> c(n);
  for (std::size_t i = 0; i < out_len; ++i) {
    for (std::size_t j = 0; j < slots; ++j) v[j] = static_cast<std::int64_t>(slot(i * slots + j) % p);
    for (std::size_t k = slots; k-- > n;) {
      const std::int64_t top = v[k] % static_cast<std::int64_t>(p);
      if (top == 0) continue;
      for (std::uint32_t r = 0; r < n; ++r) v[k - n + r] -= top * m[r];
      v[k] = 0;
    }
    for (std::uint32_t r = 0; r < n; ++r) {
      std::int64_t x = v[r] % static_cast<std::int64_t>(p);
      if (x < 0) x += p;
      c[r] = static_cast<std::uint32_t>(x);
    }
    out[i] = F.from_coords(c);
  }
  return out;
}

}  // namespace detail

Poly::Poly(Field f, std::vector<FieldElem> coeffs) : f_(std::move(f)), c_(std::move(coeffs)) { trim(); }

Poly Poly::constant(Field f, FieldElem c) {
  Poly r(std::move(f));
  if (!c.is_zero()) r.c_.push_back(c);
  return r;
}

Poly Poly::monomial(Field f, FieldElem c, std::uint64_t e) {
  Poly r(std::move(f));
  if (c.is_zero()) return r;
  detail::check_degree(e);
  r.c_.assign(e + 1, FieldElem{});
  r.c_[e] = c;
  return r;
}

Poly Poly::from_ints(Field f, std::initializer_list<std::int64_t> coeffs) {
  std::vector<FieldElem> c;
  c.reserve(coeffs.size());
  for (auto x : coeffs) c.push_back(f->from_int(x));
  return Poly(std::move(f), std::move(c));
}

void Poly::trim() noexcept {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

void Poly::check_same(const Poly& o) const {
  if (f_ != o.f_) {
    if (!f_ || !o.f_ || f_->p() != o.f_->p() || f_->modulus() != o.f_->modulus()) {
      throw Error(Errc::InvalidArgument, "polynomials over different fields");
    }
  }
}

std::vector<std::pair<std::uint64_t, FieldElem>> Poly::terms() const {
  std::vector<std::pair<std::uint64_t, FieldElem>> out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!c_[i].is_zero()) out.emplace_back(i, c_[i]);
  }
  return out;
}

std::uint64_t Poly::valuation() const noexcept {
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!c_[i].is_zero()) return i;
  }
  return 0;
}

void Poly::add_scaled(const Poly& o, FieldElem c, std::uint64_t shift) {
  if (o.is_zero() || c.is_zero()) return;
  if (!f_) f_ = o.f_;
  check_same(o);
  detail::check_degree(o.c_.size() - 1 + shift);
  const FieldCtx& F = *f_;
  if (c_.size() < o.c_.size() + shift) c_.resize(o.c_.size() + shift);
  if (c.v == 1) {
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i + shift] = F.add(c_[i + shift], o.c_[i]);
  } else {
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i + shift] = F.add(c_[i + shift], F.mul(c, o.c_[i]));
  }
  trim();
}

Poly& Poly::operator+=(const Poly& o) {
  add_scaled(o, FieldElem{1});
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.is_zero()) return *this;
  if (!f_) f_ = o.f_;
  add_scaled(o, f_->neg(FieldElem{1}));
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly(a.f_ ? a.f_ : b.f_);
  a.check_same(b);
  return Poly(a.f_, detail::mul_dense(*a.f_, a.c_, b.c_));
}

Poly& Poly::operator*=(const Poly& o) {
  *this = *this * o;
  return *this;
}

Poly Poly::operator-() const {
  Poly r(*this);
  for (auto& x : r.c_) x = f_->neg(x);
  return r;
}

Poly Poly::scaled(FieldElem c) const {
  if (c.is_zero()) return Poly(f_);
  Poly r(*this);
  if (c.v == 1) return r;
  for (auto& x : r.c_) x = f_->mul(c, x);
  return r;
}

Poly Poly::shifted(std::uint64_t s) const {
  if (is_zero() || s == 0) return *this;
  detail::check_degree(c_.size() - 1 + s);
  Poly r(f_);
  r.c_.assign(s, FieldElem{});
  r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  return r;
}

Poly Poly::inflated(std::uint64_t m) const {
  if (m == 1 || is_constant()) return *this;
  if (m == 0) throw Error(Errc::InvalidArgument, "inflation by zero");
  const std::uint64_t deg = static_cast<std::uint64_t>(degree());
  if (deg > kMaxDegree / m) throw Error(Errc::ExponentOverflow, "inflated degree too large");
  Poly r(f_);
  r.c_.assign(deg * m + 1, FieldElem{});
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i * m] = c_[i];
  return r;
}

Poly Poly::pow(std::uint64_t e) const {
  Poly result = Poly::one(f_);
  if (e == 0) return result;
  if (is_zero()) return *this;
  Poly base = *this;
  // coefficients are fixed by x -> x^q, so f(t)^q = f(t^q)
  while (e % f_->q() == 0) {
    base = base.inflated(f_->q());
    e /= f_->q();
  }
  while (true) {
    if (e & 1) result *= base;
    e >>= 1;
    if (!e) break;
    base = base * base;
  }
  return result;
}

Poly Poly::monic() const {
  if (is_zero() || lead().v == 1) return *this;
  return scaled(f_->inv(lead()));
}

Poly Poly::derivative() const {
  Poly r(f_);
  if (c_.size() <= 1) return r;
  r.c_.resize(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) {
    r.c_[i - 1] = f_->mul(f_->from_int(static_cast<std::int64_t>(i % f_->p())), c_[i]);
  }
  r.trim();
  return r;
}

FieldElem Poly::eval(FieldElem x) const noexcept {
  FieldElem r{};
  for (std::size_t i = c_.size(); i-- > 0;) r = f_->add(f_->mul(r, x), c_[i]);
  return r;
}

namespace {

constexpr std::size_t kNewtonThreshold = 96;

// 1/s mod x^n for s(0) != 0, by Newton iteration.
std::vector<FieldElem> inverse_mod_xn(const FieldCtx& F, std::span<const FieldElem> s, std::size_t n) {
  std::vector<FieldElem> g{F.inv(s[0])};
  std::size_t prec = 1;
  while (prec < n) {
    const std::size_t next = std::min(n, 2 * prec);
    std::span<const FieldElem> sl = s.subspan(0, std::min(s.size(), next));
    std::vector<FieldElem> e = detail::mul_dense(F, sl, g);
    e.resize(next);
    // g <- g (2 - s g) = g - g (s g - 1); the low prec terms of s g - 1 vanish
    std::vector<FieldElem> hi(e.begin() + static_cast<std::ptrdiff_t>(prec), e.end());
    std::vector<FieldElem> corr = detail::mul_dense(F, g, hi);
    g.resize(next);
    for (std::size_t i = prec; i < next; ++i) {
      const std::size_t j = i - prec;
      if (j < corr.size()) g[i] = F.neg(corr[j]);
    }
    prec = next;
  }
  g.resize(n);
  return g;
}

}  // namespace

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(Errc::ZeroDenominator, "polynomial division by zero");
  const Field& f = b.f_;
  if (a.degree() < b.degree()) return {Poly(f), a};
  a.check_same(b);
  const FieldCtx& F = *f;
  if (b.c_.size() >= kNewtonThreshold && a.c_.size() - b.c_.size() + 1 >= kNewtonThreshold) {
    const std::size_t ql = a.c_.size() - b.c_.size() + 1;
    std::vector<FieldElem> rb(b.c_.rbegin(), b.c_.rend());
    std::vector<FieldElem> ra(a.c_.rbegin(), a.c_.rbegin() + static_cast<std::ptrdiff_t>(ql));
    std::vector<FieldElem> rq = detail::mul_dense(F, ra, inverse_mod_xn(F, rb, ql));
    rq.resize(ql);
    std::reverse(rq.begin(), rq.end());
    Poly quo(f, std::move(rq));
    Poly rem = a - quo * b;
    return {std::move(quo), std::move(rem)};
  }
  std::vector<FieldElem> r = a.c_;
  const std::size_t db = b.c_.size() - 1;
  std::vector<FieldElem> quo(r.size() - db);
  const FieldElem inv_lead = F.inv(b.lead());
  if (F.is_prime()) {
    const std::uint32_t p = F.p();
    for (std::size_t k = r.size(); k-- > db;) {
      if (r[k].is_zero()) continue;
      const std::uint32_t c = F.mul(r[k], inv_lead).v;
      quo[k - db] = {c};
      const std::uint32_t nc = (p - c) % p;
      const std::size_t base = k - db;
      for (std::size_t i = 0; i < db; ++i) {
        if (b.c_[i].is_zero()) continue;
        r[base + i].v = static_cast<std::uint32_t>((r[base + i].v + static_cast<std::uint64_t>(nc) * b.c_[i].v) % p);
      }
      r[k] = {};
    }
  } else {
    for (std::size_t k = r.size(); k-- > db;) {
      if (r[k].is_zero()) continue;
      const FieldElem c = F.mul(r[k], inv_lead);
      quo[k - db] = c;
      const FieldElem nc = F.neg(c);
      const std::size_t base = k - db;
      for (std::size_t i = 0; i < db; ++i) {
        if (b.c_[i].is_zero()) continue;
        r[base + i] = F.add(r[base + i], F.mul(nc, b.c_[i]));
      }
      r[k] = {};
    }
  }
  return {Poly(f, std::move(quo)), Poly(f, std::move(r))};
}

Poly Poly::operator%(const Poly& b) const { return divmod(*this, b).second; }

Poly Poly::exact_div(const Poly& b) const {
  auto [q, r] = divmod(*this, b);
  if (!r.is_zero()) throw Error(Errc::InvalidArgument, "inexact polynomial division");
  return q;
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly lcm(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly(a.field() ? a.field() : b.field());
  Poly g = gcd(a, b);
  return (a.exact_div(g) * b).monic();
}

}  // namespace mzv
