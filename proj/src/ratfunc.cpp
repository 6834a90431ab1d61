#include "mzv/ratfunc.hpp"

namespace mzv {

RatFunc::RatFunc(Poly num) : num_(std::move(num)), den_(Poly::one(num_.field())) {}

RatFunc RatFunc::from_reduced(Poly num, Poly den) {
  RatFunc r;
  r.num_ = std::move(num);
  r.den_ = std::move(den);
  return r;
}

RatFunc rat_normalize(Poly num, Poly den) {
  if (den.is_zero()) throw Error(Errc::ZeroDenominator, "rational function with zero denominator");
  const Field f = den.field();
  if (num.is_zero()) return RatFunc(f);
  Poly g = gcd(num, den);
  if (!g.is_one()) {
    num = num.exact_div(g);
    den = den.exact_div(g);
  }
  const FieldElem c = den.lead();
  if (c.v != 1) {
    const FieldElem ci = f->inv(c);
    num = num.scaled(ci);
    den = den.scaled(ci);
  }
  return RatFunc::from_reduced(std::move(num), std::move(den));
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    if (den_.is_one()) {
      num_ += o.num_;
      return *this;
    }
    Poly n = num_ + o.num_;
    return *this = rat_normalize(std::move(n), den_);
  }
  Poly g = gcd(den_, o.den_);
  if (g.is_one()) {
    Poly n = num_ * o.den_ + o.num_ * den_;
    Poly d = den_ * o.den_;
    if (n.is_zero()) return *this = RatFunc(field());
    num_ = std::move(n);
    den_ = std::move(d);
    return *this;
  }
  Poly d1 = den_.exact_div(g), d2 = o.den_.exact_div(g);
  Poly n = num_ * d2 + o.num_ * d1;
  if (n.is_zero()) return *this = RatFunc(field());
  Poly h = gcd(n, g);
  if (!h.is_one()) {
    n = n.exact_div(h);
    d2 = o.den_.exact_div(h);
  } else {
    d2 = o.den_;
  }
  num_ = std::move(n);
  den_ = d1 * d2;
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = RatFunc(field());
  if (den_.is_one() && o.den_.is_one()) {
    num_ *= o.num_;
    return *this;
  }
  Poly g1 = o.den_.is_one() ? Poly::one(field()) : gcd(num_, o.den_);
  Poly g2 = den_.is_one() ? Poly::one(field()) : gcd(o.num_, den_);
  Poly n1 = g1.is_one() ? num_ : num_.exact_div(g1);
  Poly n2 = g2.is_one() ? o.num_ : o.num_.exact_div(g2);
  Poly d1 = g2.is_one() ? den_ : den_.exact_div(g2);
  Poly d2 = g1.is_one() ? o.den_ : o.den_.exact_div(g1);
  num_ = n1 * n2;
  den_ = d1 * d2;
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

RatFunc RatFunc::operator-() const { return from_reduced(-num_, den_); }

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw Error(Errc::ZeroDenominator, "inverse of the zero rational function");
  const FieldElem ci = field()->inv(num_.lead());
  return from_reduced(den_.scaled(ci), num_.scaled(ci));
}

RatFunc RatFunc::scaled(FieldElem c) const {
  if (c.is_zero()) return RatFunc(field());
  return from_reduced(num_.scaled(c), den_);
}

RatFunc RatFunc::pow(std::int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  if (e == 0) return one(field());
  return from_reduced(num_.pow(static_cast<std::uint64_t>(e)), den_.pow(static_cast<std::uint64_t>(e)));
}

RatFunc RatFunc::inflated(std::uint64_t m) const {
  // t -> t^m is an injective ring map, so coprimality survives
  return from_reduced(num_.inflated(m), den_.inflated(m));
}

}  // namespace mzv
