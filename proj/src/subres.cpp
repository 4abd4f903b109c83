#include "prur/subres.hpp"

#include "prur/budget.hpp"
#include "prur/errors.hpp"
#include "prur/groebner.hpp"
#include "prur/polygcd.hpp"

namespace prur {

namespace {

MvPoly one_like(const MvPoly& z) { return MvPoly(z.ring(), Rational(1)); }

ZUPoly scale(const ZUPoly& p, const MvPoly& c) {
  if (c.is_one()) return p;
  return p.scaled(c);
}

ZUPoly divide_coeffs(const ZUPoly& p, const MvPoly& c) {
  if (c.is_one()) return p;
  std::vector<MvPoly> v;
  v.reserve(p.coeffs().size());
  for (const auto& x : p.coeffs()) v.push_back(divide_exact(x, c));
  return ZUPoly(p.zero(), std::move(v));
}

// -Rem(c * P, Q) / den over k[U], exact. In the normal case c = lc(Q)^e and
// the scaling cancels.
ZUPoly neg_rem_over(const MvPoly& c, const ZUPoly& P, const ZUPoly& Q, const MvPoly& den) {
  const int e = P.degree() >= Q.degree() ? P.degree() - Q.degree() + 1 : 0;
  const MvPoly lce = Q.lc().pow(static_cast<unsigned>(e));
  const ZUPoly r = pseudo_rem(P, Q);
  if (auto up = try_divide_exact(c, lce)) return -divide_coeffs(scale(r, *up), den);
  if (auto down = try_divide_exact(lce, c)) return -divide_coeffs(r, *down * den);
  return -divide_coeffs(scale(r, c), lce * den);
}

MvPoly bareiss_det(std::vector<std::vector<MvPoly>> m, const MvPoly& zero) {
  const std::size_t n = m.size();
  if (n == 0) return one_like(zero);
  MvPoly prev = one_like(zero);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m[p][k].is_zero()) ++p;
      if (p == n) return zero;
      std::swap(m[p], m[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = divide_exact(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

}  // namespace

SubresChain subres_determinantal(const ZUPoly& A0, const ZUPoly& B0) {
  ZUPoly A = A0;
  ZUPoly B = B0;
  if (A.degree() < B.degree()) std::swap(A, B);
  const int p = A.degree();
  const int q = B.degree();
  if (q < 1) throw PreconditionError("subresultants need polynomials of positive degree");
  const MvPoly zero = A.zero();
  SubresChain out{A, B, {}, {}};
  for (int j = 0; j < q; ++j) {
    const int rows = p + q - 2 * j;
    const int top = p + q - j - 1;  // degree of the first column
    std::vector<std::vector<MvPoly>> M;
    auto push_row = [&](const ZUPoly& f, int shift) {
      std::vector<MvPoly> row(static_cast<std::size_t>(top + 1), zero);
      for (int d = 0; d <= f.degree(); ++d) row[static_cast<std::size_t>(top - (d + shift))] = f.coeff(d);
      M.push_back(std::move(row));
    };
    for (int k = q - j - 1; k >= 0; --k) push_row(A, k);
    for (int k = p - j - 1; k >= 0; --k) push_row(B, k);
    std::vector<MvPoly> coeffs(static_cast<std::size_t>(j + 1), zero);
    for (int i = 0; i <= j; ++i) {
      std::vector<std::vector<MvPoly>> sq(static_cast<std::size_t>(rows));
      for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < rows - 1; ++c) sq[r].push_back(M[r][c]);
        sq[r].push_back(M[r][static_cast<std::size_t>(top - i)]);
      }
      coeffs[i] = bareiss_det(std::move(sq), zero);
    }
    out.psc.push_back(coeffs[j]);
    out.subres.emplace_back(zero, std::move(coeffs));
  }
  const MvPoly c = p > q ? B.lc().pow(static_cast<unsigned>(p - q - 1)) : one_like(zero);
  out.subres.push_back(scale(B, c));
  out.psc.push_back(c * B.lc());
  return out;
}

SubresChain subres_chain(const ZUPoly& A0, const ZUPoly& B0) {
  ZUPoly A = A0;
  ZUPoly B = B0;
  if (A.degree() < B.degree()) std::swap(A, B);
  const int p = A.degree();
  const int q = B.degree();
  if (p < 1 || B.is_zero()) throw PreconditionError("subresultants need A of positive degree and B nonzero");
  if (q == 0) {
    // Only SubRes_0 = lc(B)^(p-1) B, a constant.
    const MvPoly c = B.lc().pow(static_cast<unsigned>(p - 1));
    return SubresChain{A, B, {scale(B, c)}, {c * B.lc()}};
  }
  if (p == q) return subres_determinantal(A, B);
  const MvPoly zero = A.zero();
  const MvPoly one = one_like(zero);
  std::vector<ZUPoly> P(static_cast<std::size_t>(p + 1), ZUPoly(zero));
  std::vector<MvPoly> s(static_cast<std::size_t>(p + 1), zero);
  std::vector<MvPoly> t(static_cast<std::size_t>(p + 1), zero);
  P[p] = A;
  s[p] = one;
  t[p] = one;
  P[p - 1] = B;
  t[p - 1] = B.lc();
  s[p - 1] = q == p - 1 ? t[p - 1] : zero;
  int i = p + 1;
  int j = p;
  while (j >= 1 && !P[j - 1].is_zero()) {
    charge_steps(1);
    const int k = P[j - 1].degree();
    if (k == j - 1) {
      s[j - 1] = t[j - 1];
      if (k == 0) break;
      P[k - 1] = neg_rem_over(s[j - 1] * s[j - 1], P[i - 1], P[j - 1], s[j] * t[i - 1]);
    } else {
      s[j - 1] = zero;
      for (int d = 1; d <= j - k - 1; ++d) {
        MvPoly v = divide_exact(t[j - 1] * t[j - d], s[j]);
        t[j - d - 1] = d % 2 == 1 ? -v : v;
      }
      s[k] = t[k];
      P[k] = divide_coeffs(scale(P[j - 1], s[k]), t[j - 1]);
      for (int l = j - 2; l >= k + 1; --l) {
        P[l] = ZUPoly(zero);
        s[l] = zero;
      }
      if (k == 0) break;
      P[k - 1] = neg_rem_over(t[j - 1] * s[k], P[i - 1], P[j - 1], s[j] * t[i - 1]);
    }
    t[k - 1] = P[k - 1].is_zero() ? zero : P[k - 1].lc();
    i = j;
    j = k;
  }
  SubresChain out{A, B, {}, {}};
  for (int l = 0; l <= q; ++l) {
    out.subres.push_back(P[l]);
    out.psc.push_back(P[l].coeff(static_cast<std::size_t>(l)));
  }
  return out;
}

ZUPoly reduce_mod(const ZUPoly& p, const std::vector<MvPoly>& E) {
  if (E.empty() || p.is_zero()) return p;
  const GroebnerBasis& gb = basis_of(E, p.zero().ring());
  if (gb.is_zero_ideal()) return p;
  std::vector<MvPoly> v;
  for (const auto& c : p.coeffs()) v.push_back(normal_form(c, gb));
  return ZUPoly(p.zero(), std::move(v));
}

RatFun reduce_mod(const RatFun& f, const std::vector<MvPoly>& E) {
  if (E.empty() || f.is_zero()) return f;
  const GroebnerBasis& gb = basis_of(E, f.ring());
  if (gb.is_zero_ideal()) return f;
  MvPoly num = normal_form(f.num(), gb);
  MvPoly den = normal_form(f.den(), gb);
  if (den.is_zero()) return f;
  return RatFun(std::move(num), std::move(den));
}

RPoly reduce_mod(const RPoly& p, const std::vector<MvPoly>& E) {
  if (E.empty() || p.is_zero()) return p;
  std::vector<RatFun> v;
  for (const auto& c : p.coeffs()) v.push_back(reduce_mod(c, E));
  return RPoly(p.zero(), std::move(v));
}

std::vector<GcdBranch> parametric_gcd(const SubresChain& chain, const ConstructibleSet& cs) {
  const MvPoly zero = chain.A.zero();
  const RingPtr& params = zero.ring();
  const int q = chain.B.degree();
  std::vector<GcdBranch> out;
  std::vector<MvPoly> E = cs.E;
  auto emit = [&](ConstructibleSet set, ZUPoly d, int deg) {
    if (is_empty(set, params)) return;
    d = primitive_part(reduce_mod(d, set.E));
    if (d.degree() > 0 && !d.lc().is_constant()) set.N = times(set.N, {d.lc()});
    out.push_back(GcdBranch{std::move(set), std::move(d), deg});
  };
  for (int i = 0; i <= q; ++i) {
    if (i == q) {
      emit(ConstructibleSet{E, cs.N}, chain.B, q);
      break;
    }
    const GroebnerBasis& gb = basis_of(E, params);
    if (gb.is_unit()) break;
    MvPoly psc = chain.psc[static_cast<std::size_t>(i)];
    if (!gb.is_zero_ideal()) psc = normal_form(psc, gb);
    if (psc.is_zero()) continue;
    ZUPoly d = i == 0 ? ZUPoly::constant(zero, one_like(zero)) : chain.subres[static_cast<std::size_t>(i)];
    emit(ConstructibleSet{E, times(cs.N, {psc})}, std::move(d), i);
    if (psc.is_constant()) break;
    // Same zero set as psc, much smaller bases.
    E.push_back(squarefree_part_capped(psc));
    if (is_empty(ConstructibleSet{E, cs.N}, params)) break;
  }
  return out;
}

std::vector<GcdBranch> parametric_gcd(const ZUPoly& A, const ZUPoly& B, const ConstructibleSet& cs) {
  return parametric_gcd(subres_chain(A, B), cs);
}

std::vector<std::pair<ConstructibleSet, int>> gcd_degree_partition(const ZUPoly& A, const ConstructibleSet& cs) {
  std::vector<std::pair<ConstructibleSet, int>> out;
  for (auto& b : parametric_gcd(A, A.derivative(), cs)) out.emplace_back(std::move(b.cs), b.deg);
  return out;
}

}  // namespace prur
