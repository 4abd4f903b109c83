#pragma once

#include <gmpxx.h>

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "prur/ring.hpp"

namespace prur {

using Integer = mpz_class;
using Rational = mpq_class;

struct Term {
  Monomial mono;
  Rational coeff;
};

/// Sparse multivariate polynomial with exact rational coefficients. Terms are
/// kept strictly decreasing in the ring's block order and never hold a zero
/// coefficient, so the zero polynomial has no terms.
class MvPoly {
 public:
  /// Unbound zero; only useful as a placeholder before assignment.
  MvPoly() = default;
  explicit MvPoly(RingPtr ring);
  MvPoly(RingPtr ring, const Rational& constant);

  static MvPoly variable(RingPtr ring, std::size_t index, unsigned power = 1);
  static MvPoly term(RingPtr ring, Monomial mono, Rational coeff);
  /// Accepts terms in any order; equal monomials are merged, zeros dropped.
  static MvPoly from_terms(RingPtr ring, std::vector<Term> terms);
  /// Terms already strictly decreasing with nonzero coefficients.
  static MvPoly from_sorted_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  bool is_one() const;
  /// Value of a constant polynomial.
  Rational constant_value() const;
  /// Coefficient of the constant monomial (zero if absent).
  Rational constant_coefficient() const;

  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().mono; }
  const Rational& leading_coefficient() const { return leading_term().coeff; }

  bool involves(std::size_t index) const;
  /// True if some term has a positive exponent on a variable of the X block.
  bool has_vars() const;
  unsigned degree(std::size_t index) const;
  unsigned total_degree() const;

  MvPoly operator-() const;
  MvPoly& operator+=(const MvPoly& other);
  MvPoly& operator-=(const MvPoly& other);
  MvPoly& operator*=(const MvPoly& other);
  MvPoly& operator*=(const Rational& c);

  MvPoly mul_term(const Monomial& mono, const Rational& coeff) const;
  MvPoly pow(unsigned exponent) const;
  MvPoly derivative(std::size_t index) const;

  bool operator==(const MvPoly& other) const;
  bool operator!=(const MvPoly& other) const { return !(*this == other); }

  /// Rendering in the input grammar, e.g. "u1*x1^2 - 3/4*x2 + 1".
  std::string to_string() const;

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

MvPoly operator+(MvPoly a, const MvPoly& b);
MvPoly operator-(MvPoly a, const MvPoly& b);
MvPoly operator*(const MvPoly& a, const MvPoly& b);
MvPoly operator*(MvPoly a, const Rational& c);
MvPoly operator*(const Rational& c, MvPoly a);

/// a + c * mono * b, the merge step used by every reduction loop.
MvPoly add_scaled(const MvPoly& a, const Rational& c, const Monomial& mono, const MvPoly& b);

/// Throws ContextError unless both polynomials live in the same ring.
void require_same_ring(const MvPoly& a, const MvPoly& b);

/// Rational content with the sign of the leading coefficient, so that
/// p / content(p) has coprime integer coefficients and a positive leading
/// coefficient. content(0) = 0.
Rational rational_content(const MvPoly& p);
MvPoly primitive_integer_part(const MvPoly& p);
MvPoly monic(const MvPoly& p);

/// Exact quotient a / b, or nullopt when b does not divide a.
std::optional<MvPoly> try_divide_exact(const MvPoly& a, const MvPoly& b);
/// Exact quotient; throws InternalError when the division is not exact.
MvPoly divide_exact(const MvPoly& a, const MvPoly& b);

/// Substitutes values for the symbols whose entry is engaged.
MvPoly substitute(const MvPoly& p, std::span<const std::optional<Rational>> values);
/// Full evaluation; values.size() == ring size.
Rational evaluate(const MvPoly& p, std::span<const Rational> values);

/// Re-expresses p in another ring, matching symbols by name. Symbols of p
/// that occur with positive degree must exist in the target.
MvPoly map_to_ring(const MvPoly& p, const RingPtr& target);

/// Splits p in k[U][X] into (X-monomial, coefficient in k[U]) blocks in
/// decreasing X order; coefficients live in ring().param_ring().
struct VarBlock {
  Monomial var_part;  // parameters zeroed
  MvPoly coeff;
};
std::vector<VarBlock> var_blocks(const MvPoly& p);
/// Leading X-monomial block of the terms of p from index `from` on, which
/// must not be past the end.
VarBlock leading_var_block(const MvPoly& p, std::size_t from = 0);
/// Embeds a k[U] polynomial (param ring) into the full ring, multiplied by the
/// X-monomial var_part.
MvPoly lift_param_poly(const MvPoly& coeff, const Monomial& var_part, const RingPtr& full);
/// Sum of blocks back into a polynomial of the full ring.
MvPoly from_var_blocks(const std::vector<VarBlock>& blocks, const RingPtr& full);

std::string rational_to_string(const Rational& q);

}  // namespace prur
