#pragma once

#include <vector>

#include "prur/mvpoly.hpp"

namespace prur {

/// ring: coefficients in Q, leading terms under the full block order of
/// k[U, X]. field: coefficients in k(U), leading terms taken in X only
/// (parameters act as scalars); polynomials are kept in k[U][X] by
/// pseudo-reduction and made primitive over k[U].
enum class GbMode { ring, field };

struct GroebnerBasis {
  RingPtr ring;
  GbMode mode = GbMode::ring;
  bool reduced = false;
  /// Sorted ascending by leading monomial; empty for the zero ideal.
  std::vector<MvPoly> gens;

  bool is_unit() const;
  bool is_zero_ideal() const { return gens.empty(); }
};

/// Leading monomial in the sense of the mode (parameters zeroed in field mode).
Monomial lead_monomial(const MvPoly& p, GbMode mode);
/// Leading coefficient in k[U] for field mode (as a constant of the parameter
/// ring in ring mode).
MvPoly lead_coefficient(const MvPoly& p, GbMode mode);

/// Reduced Groebner basis of <F>. Each generator is primitive with integer
/// coefficients and positive leading coefficient (ring mode) or primitive
/// over Z[U] (field mode). Charges one budget step per processed pair.
GroebnerBasis buchberger(const std::vector<MvPoly>& F, RingPtr ring, GbMode mode = GbMode::ring);

/// Exact normal form in ring mode. In field mode the remainder is returned up
/// to a nonzero factor in k[U] (primitive over Z[U]).
MvPoly normal_form(const MvPoly& f, const GroebnerBasis& G);

/// Field-mode division: D * f = sum Q_i g_i + R with D in k[U] (parameter
/// ring, positive leading coefficient), no X-monomial of R divisible by any
/// LM_X(g_i).
struct Division {
  std::vector<MvPoly> quotients;
  MvPoly remainder;
  MvPoly denominator;
};
Division mv_divide(const MvPoly& f, const std::vector<MvPoly>& divisors, bool keep_quotients = true);

/// Whether f vanishes on V(E) over the algebraic closure (f in sqrt<E>),
/// decided by 1 in <E, 1 - y f> with a fresh symbol y. f and E live in the
/// parameter-only ring.
bool radical_membership(const MvPoly& f, const std::vector<MvPoly>& E);
/// Same, reusing a ring-mode basis of E.
bool radical_membership(const MvPoly& f, const GroebnerBasis& E);

/// Every S-polynomial reduces to zero (test oracle).
bool is_groebner_basis(const GroebnerBasis& G);

}  // namespace prur
