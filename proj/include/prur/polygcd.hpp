#pragma once

#include <utility>
#include <vector>

#include "prur/mvpoly.hpp"

namespace prur {

/// Coefficients of p viewed as a polynomial in symbol `index`: result[k] is
/// the coefficient of symbol^k, with that symbol removed.
std::vector<MvPoly> coefficients_in(const MvPoly& p, std::size_t index);

/// Pseudo-remainder of a by b in symbol `index`: lc(b)^(deg a - deg b + 1) * a
/// reduced by b. Requires b to involve the symbol.
MvPoly pseudo_remainder(const MvPoly& a, const MvPoly& b, std::size_t index);

/// Greatest common divisor over Q, normalized by primitive_integer_part.
/// gcd(0, 0) = 0.
MvPoly gcd(const MvPoly& a, const MvPoly& b);
MvPoly lcm(const MvPoly& a, const MvPoly& b);

/// Content of p in symbol `index` (gcd of its coefficients) and the matching
/// primitive part, both normalized.
MvPoly content_in(const MvPoly& p, std::size_t index);
MvPoly primitive_part_in(const MvPoly& p, std::size_t index);

/// Squarefree decomposition p = unit * prod f_i^{m_i}. The f_i are
/// nonconstant, pairwise coprime, squarefree and primitive; monomial factors
/// are split into single symbols. Sorted by (multiplicity, order).
std::vector<std::pair<MvPoly, unsigned>> squarefree_factors(const MvPoly& p);

/// Product of the distinct squarefree factors, or 1 for constants.
MvPoly squarefree_part(const MvPoly& p);

/// Variants for callers that only need the zero set: when the work exceeds a
/// fixed cap they give up and return the input, made primitive.
MvPoly squarefree_part_capped(const MvPoly& p);
std::vector<MvPoly> squarefree_factors_capped(const MvPoly& p);
/// lcm(n, squarefree(f)), or n * f past the cap.
MvPoly zero_set_product(const MvPoly& n, const MvPoly& f);

/// Pairwise coprime squarefree polynomials whose product has the same zero
/// set as the product of the inputs. Constants and zeros are skipped.
std::vector<MvPoly> coprime_factors(const std::vector<MvPoly>& polys);

}  // namespace prur
