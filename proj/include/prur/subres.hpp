#pragma once

#include <vector>

#include "prur/cgs.hpp"
#include "prur/ratfun.hpp"

namespace prur {

/// Signed subresultants of A and B over k[U]. subres[j] is the j-th signed
/// subresultant polynomial for j = 0..deg B (subres[deg B] is a multiple of
/// B) and psc[j] its coefficient of T^j. Signed and classical
/// subresultants agree up to sign.
struct SubresChain {
  ZUPoly A;
  ZUPoly B;
  std::vector<ZUPoly> subres;
  std::vector<MvPoly> psc;
};

SubresChain subres_chain(const ZUPoly& A, const ZUPoly& B);

/// Classical subresultants from Sylvester-type determinants (fraction-free
/// elimination). Slow; used for deg A = deg B and as a test oracle.
SubresChain subres_determinantal(const ZUPoly& A, const ZUPoly& B);

struct GcdBranch {
  ConstructibleSet cs;
  /// Content-free, positive sign, coefficients reduced modulo <E>.
  ZUPoly d;
  int deg = 0;
};

/// Parametric gcd of A and B on cs. On the branch where the gcd degree is i,
/// E_i = E u {PSC_j : j < i}, N_i = N x PSC_i and d = SubRes_i (d = 1 for
/// i = 0, d = B at the top degree, where N is kept). Empty branches dropped.
/// Requires the leading coefficients of A and B nonvanishing on cs.
std::vector<GcdBranch> parametric_gcd(const ZUPoly& A, const ZUPoly& B, const ConstructibleSet& cs);
std::vector<GcdBranch> parametric_gcd(const SubresChain& chain, const ConstructibleSet& cs);

/// Branches of cs by deg gcd(A, A').
std::vector<std::pair<ConstructibleSet, int>> gcd_degree_partition(const ZUPoly& A, const ConstructibleSet& cs);

/// Coefficients reduced to normal form modulo the basis of E.
ZUPoly reduce_mod(const ZUPoly& p, const std::vector<MvPoly>& E);
RatFun reduce_mod(const RatFun& f, const std::vector<MvPoly>& E);
RPoly reduce_mod(const RPoly& p, const std::vector<MvPoly>& E);

}  // namespace prur
