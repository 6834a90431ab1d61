#include "mzv/ffield.hpp"

#include <algorithm>
#include <limits>

namespace mzv {

namespace {

// Dense polynomial helpers over F_p used only while building the field.
using ModPoly = std::vector<std::uint32_t>;

void trim(ModPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

ModPoly poly_mod(ModPoly a, const ModPoly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  // m is monic
  while (a.size() > dm) {
    const std::uint32_t c = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - c) * static_cast<std::uint64_t>(m[i])) % p);
    }
    trim(a);
  }
  return a;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_irreducible_mod_p(std::span<const std::uint32_t> f, std::uint32_t p) {
  ModPoly g(f.begin(), f.end());
  trim(g);
  if (g.size() < 2) return false;
  const std::size_t deg = g.size() - 1;
  if (g.back() != 1) return false;
  // every monic divisor of degree k <= deg/2
  for (std::size_t k = 1; 2 * k <= deg; ++k) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < k; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      ModPoly h(k + 1, 0);
      std::uint64_t c = code;
      for (std::size_t i = 0; i < k; ++i) {
        h[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      h[k] = 1;
      if (poly_mod(g, h, p).empty()) return false;
    }
  }
  return true;
}

Field FieldCtx::create(std::uint32_t p, std::uint32_t n,
                       std::optional<std::vector<std::uint32_t>> modulus) {
  if (!mzv::is_prime(p)) throw Error(Errc::CompositeP, "characteristic " + std::to_string(p) + " is not prime");
  if (n == 0) throw Error(Errc::DegreeMismatch, "extension degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    q *= p;
    if (q > kMaxOrder) throw Error(Errc::TooLarge, "field order exceeds " + std::to_string(kMaxOrder));
  }

  std::shared_ptr<FieldCtx> f(new FieldCtx());
  f->p_ = p;
  f->n_ = n;
  f->q_ = static_cast<std::uint32_t>(q);

  if (modulus) {
    ModPoly m = *modulus;
    for (auto& c : m) {
      if (c >= p) throw Error(Errc::InvalidArgument, "modulus coefficient out of range");
    }
    trim(m);
    if (m.size() != n + 1) throw Error(Errc::DegreeMismatch, "modulus degree differs from n");
    if (m.back() != 1) throw Error(Errc::InvalidArgument, "modulus must be monic");
    if (!is_irreducible_mod_p(m, p)) throw Error(Errc::ReducibleModulus, "modulus is reducible over F_p");
    f->modulus_ = std::move(m);
  } else if (n == 1) {
    f->modulus_ = {0, 1};
  } else {
    const std::uint64_t lower = q;  // p^n candidates for the non-leading part
    for (std::uint64_t code = 0; code < lower; ++code) {
      ModPoly m(n + 1, 0);
      std::uint64_t c = code;
      for (std::uint32_t i = 0; i < n; ++i) {
        m[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      m[n] = 1;
      if (is_irreducible_mod_p(m, p)) {
        f->modulus_ = std::move(m);
        break;
      }
    }
  }
  f->build_tables();
  return f;
}

std::uint64_t FieldCtx::modulus_code() const noexcept {
  std::uint64_t code = 0;
  for (std::size_t i = modulus_.size(); i-- > 0;) code = code * p_ + modulus_[i];
  return code;
}

void FieldCtx::build_tables() {
  const std::uint32_t q = q_, n = n_, p = p_;
  coord_.assign(static_cast<std::size_t>(q) * n, 0);
  for (std::uint32_t x = 0; x < q; ++x) {
    std::uint32_t c = x;
    for (std::uint32_t i = 0; i < n; ++i) {
      coord_[x * n + i] = static_cast<std::uint16_t>(c % p);
      c /= p;
    }
  }
  auto encode = [&](const ModPoly& v) {
    std::uint32_t code = 0;
    for (std::size_t i = v.size(); i-- > 0;) code = code * p + v[i];
    return code;
  };
  add_.assign(static_cast<std::size_t>(q) * q, 0);
  mul_.assign(static_cast<std::size_t>(q) * q, 0);
  neg_.assign(q, 0);
  inv_.assign(q, 0);
  for (std::uint32_t a = 0; a < q; ++a) {
    ModPoly na(n);
    for (std::uint32_t i = 0; i < n; ++i) na[i] = (p - coord_[a * n + i]) % p;
    neg_[a] = static_cast<std::uint16_t>(encode(na));
    for (std::uint32_t b = 0; b < q; ++b) {
      ModPoly s(n), prod(2 * n - 1, 0);
      for (std::uint32_t i = 0; i < n; ++i) s[i] = (coord_[a * n + i] + coord_[b * n + i]) % p;
      add_[a * q + b] = static_cast<std::uint16_t>(encode(s));
      for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = 0; j < n; ++j) {
          prod[i + j] = (prod[i + j] + coord_[a * n + i] * coord_[b * n + j]) % p;
        }
      }
      ModPoly r = poly_mod(prod, modulus_, p);
      r.resize(n, 0);
      mul_[a * q + b] = static_cast<std::uint16_t>(encode(r));
    }
  }
  for (std::uint32_t a = 1; a < q; ++a) {
    for (std::uint32_t b = 1; b < q; ++b) {
      if (mul_[a * q + b] == 1) {
        inv_[a] = static_cast<std::uint16_t>(b);
        break;
      }
    }
  }
}

FieldElem FieldCtx::from_int(std::int64_t x) const noexcept {
  std::int64_t r = x % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return {static_cast<std::uint32_t>(r)};
}

FieldElem FieldCtx::from_coords(std::span<const std::uint32_t> coords) const {
  if (coords.size() > n_) throw Error(Errc::InvalidArgument, "too many coordinates");
  std::uint32_t code = 0;
  for (std::size_t i = coords.size(); i-- > 0;) {
    if (coords[i] >= p_) throw Error(Errc::InvalidArgument, "coordinate out of range");
    code = code * p_ + coords[i];
  }
  return {code};
}

std::vector<std::uint32_t> FieldCtx::coords(FieldElem x) const {
  std::vector<std::uint32_t> out(n_);
  for (std::uint32_t i = 0; i < n_; ++i) out[i] = coord_[x.v * n_ + i];
  return out;
}

FieldElem FieldCtx::inv(FieldElem a) const {
  if (a.is_zero()) throw Error(Errc::ZeroDenominator, "inverse of zero in F_q");
  return {inv_[a.v]};
}

FieldElem FieldCtx::pow(FieldElem a, std::uint64_t e) const noexcept {
  FieldElem r = one();
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::vector<FieldElem> FieldCtx::elements() const {
  std::vector<FieldElem> out(q_);
  for (std::uint32_t i = 0; i < q_; ++i) out[i] = {i};
  return out;
}

std::vector<std::uint32_t> base_p_digits(std::int64_t m, std::uint32_t p) {
  if (m < 0) throw Error(Errc::InvalidArgument, "digits of a negative integer");
  if (p < 2) throw Error(Errc::InvalidArgument, "base must be at least 2");
  std::vector<std::uint32_t> d;
  while (m > 0) {
    d.push_back(static_cast<std::uint32_t>(m % p));
    m /= p;
  }
  return d;
}

std::uint32_t lucas_binom(std::int64_t n, std::int64_t k, std::uint32_t p) {
  if (n < 0 || k < 0) throw Error(Errc::InvalidArgument, "binomial of a negative integer");
  if (k > n) return 0;
  // small table of C(a, b) mod p for digits a, b < p
  std::uint64_t r = 1;
  while (k > 0 || n > 0) {
    const auto nd = static_cast<std::uint32_t>(n % p);
    const auto kd = static_cast<std::uint32_t>(k % p);
    if (kd > nd) return 0;
    // C(nd, kd) mod p via multiplicative formula with Fermat inverses
    std::uint64_t num = 1, den = 1;
    for (std::uint32_t i = 0; i < kd; ++i) {
      num = num * (nd - i) % p;
      den = den * (i + 1) % p;
    }
    std::uint64_t inv = 1, base = den, e = p - 2;
    while (e) {
      if (e & 1) inv = inv * base % p;
      base = base * base % p;
      e >>= 1;
    }
    r = r * (num * inv % p) % p;
    n /= p;
    k /= p;
  }
  return static_cast<std::uint32_t>(r);
}

bool has_carry(std::int64_t x, std::int64_t y, std::uint32_t p) {
  if (x < 0 || y < 0) throw Error(Errc::InvalidArgument, "carry test on a negative integer");
  while (x > 0 && y > 0) {
    if (x % p + y % p >= p) return true;
    x /= p;
    y /= p;
  }
  return false;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(Errc::Overflow, "integer addition overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(Errc::Overflow, "integer multiplication overflow");
  return r;
}

std::int64_t ipow(std::int64_t base, std::uint32_t e) {
  std::int64_t r = 1;
  for (std::uint32_t i = 0; i < e; ++i) r = checked_mul(r, base);
  return r;
}

std::int64_t binom_exact(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  // r * (n-k+i) / i stays integral at every step
  __int128 r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > std::numeric_limits<std::int64_t>::max()) throw Error(Errc::Overflow, "binomial overflow");
  }
  return static_cast<std::int64_t>(r);
}

}  // namespace mzv
