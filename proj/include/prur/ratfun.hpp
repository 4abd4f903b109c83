#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>

#include "prur/mvpoly.hpp"
#include "prur/unipoly.hpp"

namespace prur {

/// Element of k(U): num/den over the parameter ring, kept canonical so that
/// equal fractions compare equal term for term. gcd(num, den) = 1 and den is
/// primitive over Z with a positive leading coefficient.
class RatFun {
 public:
  RatFun() = default;
  explicit RatFun(RingPtr param_ring);
  RatFun(RingPtr param_ring, const Rational& c);
  explicit RatFun(MvPoly num);
  RatFun(MvPoly num, MvPoly den);

  const MvPoly& num() const noexcept { return num_; }
  const MvPoly& den() const noexcept { return den_; }
  const RingPtr& ring() const noexcept { return num_.ring(); }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  /// True when the denominator is 1.
  bool is_polynomial() const { return den_.is_one(); }

  RatFun operator-() const;
  RatFun inverse() const;
  RatFun pow(unsigned e) const;

  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a, const RatFun& b);
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  friend RatFun operator/(const RatFun& a, const RatFun& b);
  friend RatFun operator*(const RatFun& a, const Rational& c);

  bool operator==(const RatFun& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFun& o) const { return !(*this == o); }

  /// Value at a parameter point, or nullopt where the denominator vanishes.
  std::optional<Rational> evaluate(std::span<const Rational> point) const;

  /// "num", "num/den" or "(num)/(den)".
  std::string to_string() const;

 private:
  void canonicalize();

  MvPoly num_;
  MvPoly den_;
};

inline bool coeff_is_zero(const RatFun& c) { return c.is_zero(); }
inline RatFun coeff_one(const RatFun& c) { return RatFun(c.ring(), Rational(1)); }
inline std::string coeff_to_string(const RatFun& c) { return c.to_string(); }
inline RatFun coeff_inverse(const RatFun& c) { return c.inverse(); }

using RPoly = UniPoly<RatFun>;

/// q = D * p with q over k[U]; D is the lcm of the denominators, primitive
/// with positive leading coefficient.
std::pair<MvPoly, ZUPoly> clear_denominators(const RPoly& p);
/// Same polynomial with integer-primitive content removed: divides out the
/// gcd of the coefficients over Q[U].
ZUPoly primitive_part(const ZUPoly& p);
MvPoly content(const ZUPoly& p);

RPoly to_field(const ZUPoly& p);
RPoly derivative_T(const RPoly& p);
ZUPoly derivative_T(const ZUPoly& p);

/// Specialization of all parameters; throws DomainError when a denominator
/// vanishes.
QPoly specialize(const RPoly& p, std::span<const Rational> point);
QPoly specialize(const ZUPoly& p, std::span<const Rational> point);

}  // namespace prur
