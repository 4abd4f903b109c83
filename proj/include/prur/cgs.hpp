#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "prur/groebner.hpp"
#include "prur/mvpoly.hpp"

namespace prur {

/// V(E) \ V(N) over the algebraic closure, where V(N) is the common zero set
/// of all of N. E and N live in the parameter ring. An empty E is the whole
/// space; an empty N makes the set empty.
struct ConstructibleSet {
  std::vector<MvPoly> E;
  std::vector<MvPoly> N;

  /// Whole parameter space: E = {}, N = {1}.
  static ConstructibleSet whole(const RingPtr& param_ring);
  bool contains(std::span<const Rational> point) const;
  std::string to_string() const;
};

/// Cached reduced basis of <E> in ring mode.
const GroebnerBasis& basis_of(const std::vector<MvPoly>& E, const RingPtr& param_ring);

/// True iff every n in N vanishes on V(E).
bool is_empty(const ConstructibleSet& cs, const RingPtr& param_ring);

/// N x F = {n * f}. Products are kept as lcm(n, squarefree(f)), which has the
/// same zero set as n * f; past the gcd work cap, as the plain product.
std::vector<MvPoly> times(const std::vector<MvPoly>& N, const std::vector<MvPoly>& F);
ConstructibleSet times(const ConstructibleSet& cs, const MvPoly& f);
/// (E u {f}, N)
ConstructibleSet adjoin(const ConstructibleSet& cs, const MvPoly& f);
/// E replaced by its reduced basis, N elements vanishing on V(E) dropped,
/// both sorted. Semantics unchanged.
ConstructibleSet simplify(const ConstructibleSet& cs, const RingPtr& param_ring);

/// Semantic equality: both differences are empty. Valid for locally closed
/// sets built from a single (E, N).
bool same_set(const ConstructibleSet& a, const ConstructibleSet& b, const RingPtr& param_ring);
/// Every point of a lies in b.
bool subset_of(const ConstructibleSet& a, const ConstructibleSet& b, const RingPtr& param_ring);

/// The union of a and b when it is a single set (E_a, N') with N' obtained
/// by dropping one factor from N_a; verified exactly, nullopt otherwise.
std::optional<ConstructibleSet> try_merge(const ConstructibleSet& a, const ConstructibleSet& b,
                                          const RingPtr& param_ring);
/// Repeatedly merges pairs of sets by try_merge. Order of survivors follows
/// the input.
std::vector<ConstructibleSet> merge_sets(std::vector<ConstructibleSet> sets, const RingPtr& param_ring);

enum class BranchKind { zero_dimensional, no_solution, positive_dimensional };

struct CgsBranch {
  ConstructibleSet cs;
  /// Minimal basis over k[U][X]; {1} for no solution, empty for the zero ideal.
  std::vector<MvPoly> basis;
  BranchKind kind = BranchKind::positive_dimensional;
};

/// Minimal comprehensive Groebner system of <F> on cs0: disjoint nonempty
/// branches covering cs0, each basis specializing to a minimal Groebner basis
/// with leading coefficients nonvanishing on the branch.
std::vector<CgsBranch> minimal_cgs(const std::vector<MvPoly>& F, const ConstructibleSet& cs0);

BranchKind classify(const std::vector<MvPoly>& basis);
std::vector<CgsBranch> zero_dim_branches(const std::vector<CgsBranch>& branches);

/// Standard monomials of the branch basis in X, ascending. Monomials use the
/// full ring layout with parameter exponents zero.
std::vector<Monomial> quotient_basis(const CgsBranch& branch);
std::vector<Monomial> quotient_basis(const std::vector<MvPoly>& basis);

}  // namespace prur
