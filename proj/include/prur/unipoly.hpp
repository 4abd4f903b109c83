#pragma once

#include <string>
#include <utility>
#include <vector>

#include "prur/errors.hpp"
#include "prur/mvpoly.hpp"

namespace prur {

// Coefficient hooks for UniPoly. Overloads for other coefficient types live
// next to those types and are found by argument-dependent lookup.
inline bool coeff_is_zero(const Rational& c) { return sgn(c) == 0; }
inline Rational coeff_one(const Rational&) { return Rational(1); }
inline std::string coeff_to_string(const Rational& c) { return rational_to_string(c); }
inline Rational coeff_inverse(const Rational& c) { return 1 / c; }

inline bool coeff_is_zero(const MvPoly& c) { return c.is_zero(); }
inline MvPoly coeff_one(const MvPoly& c) { return MvPoly(c.ring(), Rational(1)); }
inline std::string coeff_to_string(const MvPoly& c) { return c.to_string(); }

/// Dense univariate polynomial in T. coeffs[i] multiplies T^i and the last
/// entry is nonzero; the zero polynomial has no coefficients. `zero` fixes the
/// coefficient domain (a ring for MvPoly, a field for Rational or RatFun).
template <class C>
class UniPoly {
 public:
  explicit UniPoly(C zero) : zero_(std::move(zero)) {}
  UniPoly(C zero, std::vector<C> coeffs) : zero_(std::move(zero)), coeffs_(std::move(coeffs)) { trim(); }

  static UniPoly constant(const C& zero, C c) { return UniPoly(zero, std::vector<C>{std::move(c)}); }
  static UniPoly monomial(const C& zero, C c, std::size_t degree) {
    std::vector<C> v(degree + 1, zero);
    v[degree] = std::move(c);
    return UniPoly(zero, std::move(v));
  }
  /// T - c
  static UniPoly linear(const C& zero, const C& c) {
    return UniPoly(zero, std::vector<C>{zero - c, coeff_one(zero)});
  }

  const C& zero() const noexcept { return zero_; }
  const std::vector<C>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const C& coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : zero_; }
  const C& lc() const {
    if (coeffs_.empty()) throw DomainError("leading coefficient of the zero polynomial");
    return coeffs_.back();
  }

  UniPoly operator-() const {
    UniPoly r = *this;
    for (auto& c : r.coeffs_) c = zero_ - c;
    return r;
  }
  UniPoly& operator+=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), zero_);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] + o.coeffs_[i];
    trim();
    return *this;
  }
  UniPoly& operator-=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), zero_);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] - o.coeffs_[i];
    trim();
    return *this;
  }
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly(a.zero_);
    std::vector<C> v(a.coeffs_.size() + b.coeffs_.size() - 1, a.zero_);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (coeff_is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] = v[i + j] + a.coeffs_[i] * b.coeffs_[j];
    }
    return UniPoly(a.zero_, std::move(v));
  }
  UniPoly scaled(const C& c) const {
    std::vector<C> v;
    v.reserve(coeffs_.size());
    for (const auto& x : coeffs_) v.push_back(x * c);
    return UniPoly(zero_, std::move(v));
  }
  UniPoly shifted(std::size_t k) const {
    if (is_zero()) return *this;
    std::vector<C> v(k, zero_);
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return UniPoly(zero_, std::move(v));
  }

  UniPoly derivative() const {
    std::vector<C> v;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) v.push_back(C(coeffs_[i] * Rational(static_cast<long>(i))));
    return UniPoly(zero_, std::move(v));
  }

  C evaluate(const C& x) const {
    C acc = zero_;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
  }

  bool operator==(const UniPoly& o) const {
    if (coeffs_.size() != o.coeffs_.size()) return false;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (!(coeffs_[i] == o.coeffs_[i])) return false;
    return true;
  }
  bool operator!=(const UniPoly& o) const { return !(*this == o); }

  /// e.g. "T^4 - ((u1 - 2*u2)/u1)*T^2 + u2^2/u1^2"
  std::string to_string(const std::string& symbol = "T") const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
      if (coeff_is_zero(coeffs_[k])) continue;
      std::string c = coeff_to_string(coeffs_[k]);
      bool negative = false;
      if (!c.empty() && c[0] == '-' && !compound(c.substr(1))) {
        negative = true;
        c = c.substr(1);
      }
      if (out.empty()) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      const bool unit = c == "1";
      if (k == 0) {
        out += compound(c) ? "(" + c + ")" : c;
        continue;
      }
      if (!unit) out += (compound(c) ? "(" + c + ")" : c) + "*";
      out += symbol;
      if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
  }

 private:
  static bool compound(const std::string& s) {
    for (std::size_t i = 1; i < s.size(); ++i)
      if (s[i] == '+' || s[i] == '-' || s[i] == ' ') return true;
    return false;
  }
  void trim() {
    while (!coeffs_.empty() && coeff_is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  C zero_;
  std::vector<C> coeffs_;
};

/// Division with remainder over a field.
template <class C>
std::pair<UniPoly<C>, UniPoly<C>> divrem(const UniPoly<C>& a, const UniPoly<C>& b) {
  if (b.is_zero()) throw DomainError("univariate division by zero");
  const C inv = coeff_inverse(b.lc());
  std::vector<C> q(a.degree() >= b.degree() ? a.degree() - b.degree() + 1 : 0, a.zero());
  std::vector<C> r = a.coeffs();
  const int db = b.degree();
  for (int k = a.degree(); k >= db; --k) {
    if (coeff_is_zero(r[k])) continue;
    const C f = r[k] * inv;
    q[k - db] = f;
    for (int j = 0; j <= db; ++j) r[k - db + j] = r[k - db + j] - f * b.coeffs()[j];
  }
  r.resize(static_cast<std::size_t>(std::max(db, 0)), a.zero());
  return {UniPoly<C>(a.zero(), std::move(q)), UniPoly<C>(a.zero(), std::move(r))};
}

template <class C>
UniPoly<C> make_monic(const UniPoly<C>& p) {
  if (p.is_zero()) return p;
  return p.scaled(coeff_inverse(p.lc()));
}

/// Monic Euclidean gcd over a field; gcd(0, 0) = 0.
template <class C>
UniPoly<C> euclid_gcd(UniPoly<C> a, UniPoly<C> b) {
  while (!b.is_zero()) {
    auto r = divrem(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

/// Pseudo-remainder over an integral domain: lc(b)^(deg a - deg b + 1) * a mod b.
template <class C>
UniPoly<C> pseudo_rem(const UniPoly<C>& a, const UniPoly<C>& b) {
  if (b.is_zero()) throw DomainError("univariate pseudo-division by zero");
  const int db = b.degree();
  std::vector<C> r = a.coeffs();
  int da = a.degree();
  int pending = da >= db ? da - db + 1 : 0;
  while (da >= db) {
    const C lr = r[da];
    for (auto& x : r) x = x * b.lc();
    for (int j = 0; j <= db; ++j) r[da - db + j] = r[da - db + j] - lr * b.coeffs()[j];
    --pending;
    r.pop_back();
    --da;
    while (da >= 0 && coeff_is_zero(r[da])) {
      r.pop_back();
      --da;
    }
  }
  UniPoly<C> out(a.zero(), std::move(r));
  for (; pending > 0; --pending) out = out.scaled(b.lc());
  return out;
}

using QPoly = UniPoly<Rational>;
using ZUPoly = UniPoly<MvPoly>;

/// Number of distinct complex roots of a nonzero rational polynomial.
int distinct_root_count(const QPoly& p);

}  // namespace prur
