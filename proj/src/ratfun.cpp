#include "prur/ratfun.hpp"

#include "prur/errors.hpp"
#include "prur/polygcd.hpp"

namespace prur {

namespace {

bool single_factor(const MvPoly& p) {
  if (!p.is_monomial()) return false;
  const Term& t = p.leading_term();
  if (t.coeff != 1) return monomial::is_one(t.mono);
  unsigned symbols = 0;
  for (auto e : t.mono) symbols += e != 0 ? 1U : 0U;
  return symbols <= 1;
}

}  // namespace

RatFun::RatFun(RingPtr param_ring) : num_(param_ring), den_(param_ring, Rational(1)) {}

RatFun::RatFun(RingPtr param_ring, const Rational& c) : num_(param_ring, c), den_(param_ring, Rational(1)) {}

RatFun::RatFun(MvPoly num) : num_(std::move(num)), den_(num_.ring(), Rational(1)) {}

RatFun::RatFun(MvPoly num, MvPoly den) : num_(std::move(num)), den_(std::move(den)) {
  require_same_ring(num_, den_);
  if (den_.is_zero()) throw DomainError("rational function with zero denominator");
  canonicalize();
}

void RatFun::canonicalize() {
  if (num_.is_zero()) {
    den_ = MvPoly(num_.ring(), Rational(1));
    return;
  }
  if (den_.is_constant()) {
    num_ *= Rational(1 / den_.constant_value());
    den_ = MvPoly(num_.ring(), Rational(1));
    return;
  }
  const MvPoly g = gcd(num_, den_);
  if (!g.is_constant()) {
    num_ = divide_exact(num_, g);
    den_ = divide_exact(den_, g);
  }
  const Rational c = rational_content(den_);
  if (c != 1) {
    den_ *= Rational(1 / c);
    num_ *= Rational(1 / c);
  }
}

RatFun RatFun::operator-() const {
  RatFun r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFun RatFun::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero rational function");
  RatFun r;
  r.num_ = den_;
  r.den_ = num_;
  r.canonicalize();
  return r;
}

RatFun RatFun::pow(unsigned e) const {
  RatFun r;
  r.num_ = num_.pow(e);
  r.den_ = den_.pow(e);
  const Rational c = rational_content(r.den_);
  r.den_ *= Rational(1 / c);
  r.num_ *= Rational(1 / c);
  return r;
}

RatFun operator+(const RatFun& a, const RatFun& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  RatFun r;
  if (a.den_ == b.den_) {
    r.num_ = a.num_ + b.num_;
    r.den_ = a.den_;
  } else if (a.den_.is_one()) {
    r.num_ = a.num_ * b.den_ + b.num_;
    r.den_ = b.den_;
  } else if (b.den_.is_one()) {
    r.num_ = a.num_ + b.num_ * a.den_;
    r.den_ = a.den_;
  } else {
    const MvPoly g = gcd(a.den_, b.den_);
    const MvPoly bd = divide_exact(b.den_, g);
    r.num_ = a.num_ * bd + b.num_ * divide_exact(a.den_, g);
    r.den_ = a.den_ * bd;
  }
  if (r.den_.is_one()) return r;
  r.canonicalize();
  return r;
}

RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

RatFun operator*(const RatFun& a, const RatFun& b) {
  if (a.is_zero()) return a;
  if (b.is_zero()) return b;
  RatFun r;
  if (a.den_.is_one() && b.den_.is_one()) {
    r.num_ = a.num_ * b.num_;
    r.den_ = a.den_;
    return r;
  }
  const MvPoly g1 = gcd(a.num_, b.den_);
  const MvPoly g2 = gcd(b.num_, a.den_);
  r.num_ = divide_exact(a.num_, g1) * divide_exact(b.num_, g2);
  r.den_ = divide_exact(a.den_, g2) * divide_exact(b.den_, g1);
  const Rational c = rational_content(r.den_);
  if (c != 1) {
    r.den_ *= Rational(1 / c);
    r.num_ *= Rational(1 / c);
  }
  return r;
}

RatFun operator/(const RatFun& a, const RatFun& b) { return a * b.inverse(); }

RatFun operator*(const RatFun& a, const Rational& c) {
  RatFun r = a;
  r.num_ *= c;
  if (r.num_.is_zero()) r.den_ = MvPoly(r.num_.ring(), Rational(1));
  return r;
}

std::optional<Rational> RatFun::evaluate(std::span<const Rational> point) const {
  const Rational d = prur::evaluate(den_, point);
  if (sgn(d) == 0) return std::nullopt;
  return Rational(prur::evaluate(num_, point) / d);
}

std::string RatFun::to_string() const {
  if (den_.is_one()) return num_.to_string();
  std::string n = num_.to_string();
  if (num_.size() > 1) n = "(" + n + ")";
  std::string d = den_.to_string();
  if (!single_factor(den_)) d = "(" + d + ")";
  return n + "/" + d;
}

std::pair<MvPoly, ZUPoly> clear_denominators(const RPoly& p) {
  if (p.is_zero()) throw DomainError("clearing denominators of the zero polynomial");
  const RingPtr& ring = p.lc().ring();
  MvPoly d(ring, Rational(1));
  for (const auto& c : p.coeffs()) {
    if (!c.den().is_one()) d = lcm(d, c.den());
  }
  std::vector<MvPoly> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(c.num() * divide_exact(d, c.den()));
  return {d, ZUPoly(MvPoly(ring), std::move(out))};
}

MvPoly content(const ZUPoly& p) {
  if (p.is_zero()) return p.zero();
  MvPoly c = p.zero();
  for (const auto& x : p.coeffs()) {
    c = gcd(c, x);
    if (c.is_constant()) break;
  }
  return c;
}

ZUPoly primitive_part(const ZUPoly& p) {
  if (p.is_zero()) return p;
  const MvPoly c = content(p);
  std::vector<MvPoly> v;
  v.reserve(p.coeffs().size());
  for (const auto& x : p.coeffs()) v.push_back(c.is_constant() ? x : divide_exact(x, c));
  Integer num_gcd = 0;
  Integer den_lcm = 1;
  for (const auto& x : v)
    for (const auto& t : x.terms()) {
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num_mpz_t());
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
    }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (sgn(v.back().leading_coefficient()) < 0) scale = -scale;
  for (auto& x : v) x *= scale;
  return ZUPoly(p.zero(), std::move(v));
}

RPoly to_field(const ZUPoly& p) {
  const RingPtr& ring = p.zero().ring();
  std::vector<RatFun> v;
  v.reserve(p.coeffs().size());
  for (const auto& x : p.coeffs()) v.emplace_back(x);
  return RPoly(RatFun(ring), std::move(v));
}

RPoly derivative_T(const RPoly& p) { return p.derivative(); }
ZUPoly derivative_T(const ZUPoly& p) { return p.derivative(); }

QPoly specialize(const RPoly& p, std::span<const Rational> point) {
  std::vector<Rational> v;
  v.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    auto x = c.evaluate(point);
    if (!x) throw DomainError("denominator vanishes at the specialization point");
    v.push_back(*x);
  }
  return QPoly(Rational(0), std::move(v));
}

QPoly specialize(const ZUPoly& p, std::span<const Rational> point) {
  std::vector<Rational> v;
  v.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) v.push_back(evaluate(c, point));
  return QPoly(Rational(0), std::move(v));
}

}  // namespace prur
