#include "prur/rur.hpp"

#include "prur/budget.hpp"
#include "prur/errors.hpp"
#include "prur/groebner.hpp"
#include "prur/polygcd.hpp"

namespace prur {

SepCandidate separating_candidate(const RingPtr& ring, std::size_t k0, const std::vector<MvPoly>& user,
                                  std::size_t index) {
  if (k0 < 1) throw PreconditionError("separating candidates need at least one zero");
  const std::size_t pos = index;
  if (k0 == 1) {
    if (index == 0) return {MvPoly(ring, Rational(1)), pos};
    --index;
  }
  if (index < user.size()) return {user[index], pos};
  index -= user.size();
  const Rational c(static_cast<long>(index));
  MvPoly t(ring);
  Rational w(1);
  for (std::size_t k = 0; k < ring->num_vars(); ++k) {
    if (k > 0) w *= c;
    if (sgn(w) == 0) break;
    MvPoly x = MvPoly::variable(ring, k);
    x *= w;
    t += x;
  }
  return {std::move(t), pos};
}

SepCheck check_separating(QuotientAlgebra& Q, const MvPoly& t, const ConstructibleSet& cs, std::size_t k0) {
  if (k0 < 2) throw PreconditionError("check_separating needs k0 >= 2");
  const RingPtr& params = Q.param_ring();
  RPoly chi = Q.char_poly(t);
  ZUPoly X = primitive_part(clear_denominators(chi).second);
  const int d = X.degree() - static_cast<int>(k0);
  if (d < 0) throw PreconditionError("more zeros than the quotient dimension");
  SubresChain chain = subres_chain(X, derivative_T(X));
  MvPoly psc = chain.psc[static_cast<std::size_t>(d)];
  if (!cs.E.empty()) {
    const GroebnerBasis& gb = basis_of(cs.E, params);
    if (!gb.is_zero_ideal()) psc = normal_form(psc, gb);
  }
  if (!psc.is_zero()) psc = primitive_integer_part(psc);
  SepCheck out{ConstructibleSet{cs.E, {}}, cs, std::move(chi), std::move(X), std::move(chain), psc};
  if (!psc.is_zero()) {
    out.sep_set = times(cs, psc);
    out.rest_set = adjoin(cs, psc);
  }
  return out;
}

std::vector<ConstructibleSet> split_by_factors(const ConstructibleSet& cs, const MvPoly& f) {
  const RingPtr& params = f.ring();
  std::vector<ConstructibleSet> out;
  if (f.is_zero()) {
    if (!is_empty(cs, params)) out.push_back(cs);
    return out;
  }
  std::vector<MvPoly> N = cs.N;
  for (const auto& p : squarefree_factors_capped(f)) {
    if (p.is_constant()) continue;
    ConstructibleSet piece = adjoin(ConstructibleSet{cs.E, N}, p);
    if (!is_empty(piece, params)) out.push_back(std::move(piece));
    N = times(N, {p});
  }
  return out;
}

RPoly squarefree_quotient(const RPoly& chi, const ZUPoly& d, const ConstructibleSet& cs) {
  if (d.degree() <= 0) return make_monic(chi);
  auto [q, r] = divrem(chi, to_field(d));
  // Denominators are powers of lc(d), nonzero on cs, so only numerators count.
  for (const auto& c : r.coeffs()) {
    if (c.is_zero()) continue;
    if (!is_empty(times(cs, c.num()), c.ring()))
      throw InternalError("gcd does not divide the characteristic polynomial on the branch");
  }
  return make_monic(q);
}

std::pair<RPoly, std::vector<RPoly>> rur_g_polynomials(const RPoly& chi_bar, const QuotientAlgebra::TraceRow& traces) {
  const int d = chi_bar.degree();
  const RatFun zero = chi_bar.zero();
  if (d < 1) throw PreconditionError("chi_bar must have positive degree");
  if (static_cast<int>(traces.powers.size()) < d) throw InternalError("missing traces");
  auto a = [&](int j) { return chi_bar.coeff(static_cast<std::size_t>(d - j)); };
  auto build = [&](const std::vector<RatFun>& tr) {
    if (static_cast<int>(tr.size()) < d) throw InternalError("missing traces");
    std::vector<RatFun> c(static_cast<std::size_t>(d), zero);
    for (int m = 0; m < d; ++m) {
      RatFun s = zero;
      for (int i = 0; i <= d - 1 - m; ++i) s = s + tr[static_cast<std::size_t>(i)] * a(d - 1 - m - i);
      c[static_cast<std::size_t>(m)] = s;
    }
    return RPoly(zero, std::move(c));
  };
  std::vector<RPoly> gv;
  for (const auto& row : traces.by_var) gv.push_back(build(row));
  return {build(traces.powers), std::move(gv)};
}

RurTuple build_tuple(QuotientAlgebra& Q, const SepCandidate& t, const RPoly& chi, const ZUPoly& d,
                     const ConstructibleSet& cs) {
  const std::vector<MvPoly>& E = cs.E;
  RPoly chi_bar = squarefree_quotient(chi, d, cs);
  const QuotientAlgebra::TraceRow traces = Q.traces_for(t.t, static_cast<std::size_t>(chi_bar.degree()));
  auto [g, gv] = rur_g_polynomials(chi_bar, traces);
  RurTuple out{t, reduce_mod(chi, E), reduce_mod(chi_bar, E), reduce_mod(g, E), {}};
  for (auto& p : gv) out.g_vars.push_back(reduce_mod(p, E));
  return out;
}

std::optional<RurTuple> rur_nonparametric(const std::vector<MvPoly>& F, const RingPtr& ring,
                                          const std::vector<MvPoly>& user) {
  if (ring->num_params() != 0) throw PreconditionError("rur_nonparametric takes a parameter-free system");
  GroebnerBasis gb = buchberger(F, ring, GbMode::field);
  if (gb.is_unit()) return std::nullopt;
  CgsBranch branch{ConstructibleSet::whole(ring->param_ring()), gb.gens, classify(gb.gens)};
  if (branch.kind != BranchKind::zero_dimensional) throw PreconditionError("system is not zero-dimensional");
  QuotientAlgebra Q(branch);
  const auto q1 = Q.hermite_form().specialize({});
  const int rank = static_cast<int>(rank_of(*q1));
  // No constant candidate here: t = 1 would hide the coordinates in chi.
  for (std::size_t index = rank == 1 ? 1 : 0;; ++index) {
    charge_steps(1);
    SepCandidate t = separating_candidate(ring, static_cast<std::size_t>(rank), user, index);
    RPoly chi = Q.char_poly(t.t);
    QPoly chi_q = specialize(chi, {});
    if (distinct_root_count(chi_q) != rank) continue;
    QPoly g = euclid_gcd(chi_q, chi_q.derivative());
    std::vector<MvPoly> gc;
    for (int i = 0; i <= g.degree(); ++i) gc.push_back(MvPoly(ring->param_ring(), g.coeff(static_cast<std::size_t>(i))));
    return build_tuple(Q, t, chi, ZUPoly(MvPoly(ring->param_ring()), std::move(gc)), branch.cs);
  }
}

}  // namespace prur
