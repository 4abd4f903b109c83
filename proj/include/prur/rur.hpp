#pragma once

#include <optional>
#include <vector>

#include "prur/quotient.hpp"
#include "prur/subres.hpp"

namespace prur {

struct SepCandidate {
  MvPoly t;
  /// Position in the candidate stream.
  std::size_t index = 0;
};

/// The index-th separating candidate for a branch with k0 zeros in the ring's
/// variables: 1 first when k0 = 1, then the user forms, then x1 + c*x2 + ...
/// + c^(n-1)*x_n for c = 0, 1, 2, ... The stream never ends.
SepCandidate separating_candidate(const RingPtr& ring, std::size_t k0, const std::vector<MvPoly>& user,
                                  std::size_t index);

struct SepCheck {
  ConstructibleSet sep_set;
  ConstructibleSet rest_set;
  RPoly chi;
  /// chi with denominators cleared, content-free.
  ZUPoly X;
  SubresChain chain;
  /// PSC_d(X, X') reduced modulo E, d = deg X - k0.
  MvPoly psc;
};

/// Where t separates the zeros of a branch with k0 >= 2 zeros on cs.
SepCheck check_separating(QuotientAlgebra& Q, const MvPoly& t, const ConstructibleSet& cs, std::size_t k0);

/// Pieces (E u {p_j}, N x p_1...p_{j-1}) over the squarefree factors p_j of
/// f; together with (E, N x f) they partition cs. Empty pieces dropped.
std::vector<ConstructibleSet> split_by_factors(const ConstructibleSet& cs, const MvPoly& f);

struct RurTuple {
  SepCandidate t;
  /// Characteristic polynomial of M_t, monic.
  RPoly chi;
  /// chi divided by the gcd of chi and chi', monic.
  RPoly chi_bar;
  RPoly g;
  std::vector<RPoly> g_vars;
};

/// chi / d in k(U)[T], monic. The remainder must vanish on cs.
RPoly squarefree_quotient(const RPoly& chi, const ZUPoly& d, const ConstructibleSet& cs);

/// g = sum_i sum_j Tr(t^i) a_j T^(d-i-j-1) and g_k likewise with Tr(x_k t^i),
/// where chi_bar = sum_j a_j T^(d-j).
std::pair<RPoly, std::vector<RPoly>> rur_g_polynomials(const RPoly& chi_bar, const QuotientAlgebra::TraceRow& traces);

/// Full tuple for t on a branch cs whose gcd of (X, X') is d; outputs reduced
/// modulo cs.E.
RurTuple build_tuple(QuotientAlgebra& Q, const SepCandidate& t, const RPoly& chi, const ZUPoly& d,
                     const ConstructibleSet& cs);

/// RUR of a zero-dimensional parameter-free system; nullopt when <F> = <1>.
std::optional<RurTuple> rur_nonparametric(const std::vector<MvPoly>& F, const RingPtr& ring,
                                          const std::vector<MvPoly>& user = {});

}  // namespace prur
