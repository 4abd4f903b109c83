#include <algorithm>
#include <map>

#include "prur/app.hpp"
#include "prur/errors.hpp"
#include "prur/groebner.hpp"

namespace prur {

namespace {

Rational random_small(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 3);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

std::vector<mpz_class> divisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> out;
  if (n == 0 || n > mpz_class("1000000000000")) return out;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    if (d * d != n) out.push_back(n / d);
  }
  return out;
}

// Rational roots of a nonzero univariate polynomial, by the rational root test.
std::vector<Rational> rational_roots(QPoly p) {
  std::vector<Rational> roots;
  if (p.degree() <= 0) return roots;
  if (sgn(p.coeff(0)) == 0) {
    roots.push_back(Rational(0));
    while (p.degree() > 0 && sgn(p.coeff(0)) == 0) p = divrem(p, QPoly::monomial(p.zero(), Rational(1), 1)).first;
  }
  if (p.degree() <= 0) return roots;
  if (p.degree() == 1) {
    roots.push_back(-p.coeff(0) / p.coeff(1));
    return roots;
  }
  mpz_class den = 1;
  for (const auto& c : p.coeffs()) den = lcm(den, c.get_den());
  const mpz_class a0 = Rational(p.coeff(0) * den).get_num();
  const mpz_class an = Rational(p.lc() * den).get_num();
  const auto ps = divisors(a0);
  const auto qs = divisors(an);
  for (const auto& a : ps)
    for (const auto& b : qs)
      for (int s : {1, -1}) {
        Rational r(s * a, b);
        r.canonicalize();
        if (sgn(p.evaluate(r)) == 0 && std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
      }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::optional<std::vector<Rational>> back_substitute(const GroebnerBasis& lexgb, std::mt19937_64& rng) {
  const RingPtr& r = lexgb.ring;
  const std::size_t m = r->size();
  std::vector<std::optional<Rational>> vals(m);
  // Under lex u1 > u2 > ... the basis is solved from the last parameter up.
  for (std::size_t idx = m; idx-- > 0;) {
    std::optional<QPoly> acc;
    for (const auto& g : lexgb.gens) {
      bool top = g.involves(idx);
      for (std::size_t k = 0; k < idx && top; ++k)
        if (g.involves(k)) top = false;
      if (!top) continue;
      MvPoly s = substitute(g, vals);
      if (s.is_zero()) continue;
      std::vector<Rational> coeffs(s.degree(idx) + 1, Rational(0));
      bool univariate = true;
      for (const auto& t : s.terms()) {
        for (std::size_t k = 0; k < m; ++k)
          if (k != idx && t.mono[k] != 0) univariate = false;
        coeffs[t.mono[idx]] += t.coeff;
      }
      if (!univariate) return std::nullopt;
      QPoly q(Rational(0), std::move(coeffs));
      acc = acc ? euclid_gcd(*acc, q) : q;
    }
    if (!acc) {
      vals[idx] = random_small(rng);
      continue;
    }
    const auto roots = rational_roots(*acc);
    if (roots.empty()) return std::nullopt;
    std::uniform_int_distribution<std::size_t> pick(0, roots.size() - 1);
    vals[idx] = roots[pick(rng)];
  }
  std::vector<Rational> out;
  for (auto& v : vals) out.push_back(*v);
  for (const auto& g : lexgb.gens)
    if (sgn(evaluate(g, out)) != 0) return std::nullopt;
  return out;
}

}  // namespace

std::optional<std::vector<Rational>> sample_point(const ConstructibleSet& cs, const RingPtr& param_ring,
                                                  std::mt19937_64& rng, int retries) {
  const std::size_t m = param_ring->size();
  if (cs.E.empty()) {
    for (int a = 0; a < retries; ++a) {
      std::vector<Rational> pt;
      for (std::size_t i = 0; i < m; ++i) pt.push_back(random_small(rng));
      if (cs.contains(pt)) return pt;
    }
    return std::nullopt;
  }
  auto lexring = Ring::make({}, param_ring->params(), MonomialOrder::lex, MonomialOrder::lex);
  std::vector<MvPoly> E;
  for (const auto& e : cs.E) E.push_back(map_to_ring(e, lexring));
  const GroebnerBasis lexgb = buchberger(E, lexring, GbMode::ring);
  if (lexgb.is_unit()) return std::nullopt;
  for (int a = 0; a < retries; ++a) {
    auto pt = back_substitute(lexgb, rng);
    if (pt && cs.contains(*pt)) return pt;
  }
  return std::nullopt;
}

SampleCheck check_point(const RurBranch& branch, const std::vector<MvPoly>& F, const std::vector<Rational>& point) {
  SampleCheck out;
  out.point = point;
  const RurTuple& tup = branch.tuple;
  QPoly cb(Rational(0));
  QPoly g(Rational(0));
  std::vector<QPoly> gv;
  try {
    cb = specialize(tup.chi_bar, point);
    g = specialize(tup.g, point);
    for (const auto& p : tup.g_vars) gv.push_back(specialize(p, point));
  } catch (const DomainError& e) {
    out.note = e.what();
    return out;
  }
  out.roots_ok = cb.degree() == static_cast<int>(branch.k) && distinct_root_count(cb) == static_cast<int>(branch.k);
  out.gcd_ok = cb.degree() > 0 && euclid_gcd(g, cb).degree() == 0;
  if (cb.degree() <= 0) {
    out.note = "chi_bar is constant";
    return out;
  }
  auto mod = [&](const QPoly& p) { return divrem(p, cb).second; };
  std::map<std::pair<std::size_t, unsigned>, QPoly> powers;  // (k, e) -> base_k^e, k = n means g
  auto power = [&](std::size_t k, unsigned e) -> const QPoly& {
    auto key = std::make_pair(k, e);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    QPoly v = QPoly::constant(Rational(0), Rational(1));
    const QPoly& base = k < gv.size() ? gv[k] : g;
    for (unsigned i = 0; i < e; ++i) v = mod(v * base);
    return powers.emplace(key, std::move(v)).first->second;
  };
  const std::size_t n = gv.size();
  out.residual_ok = true;
  for (const auto& f : F) {
    std::vector<std::optional<Rational>> vals(f.ring()->size());
    for (std::size_t i = 0; i < point.size(); ++i) vals[n + i] = point[i];
    const MvPoly fu = substitute(f, vals);
    unsigned D = 0;
    for (const auto& t : fu.terms()) D = std::max(D, monomial::block_degree(t.mono, 0, n));
    QPoly acc(Rational(0));
    for (const auto& t : fu.terms()) {
      QPoly term = QPoly::constant(Rational(0), t.coeff);
      const unsigned deg = monomial::block_degree(t.mono, 0, n);
      for (std::size_t k = 0; k < n; ++k)
        if (t.mono[k] != 0) term = mod(term * power(k, t.mono[k]));
      if (deg < D) term = mod(term * power(n, D - deg));
      acc += term;
    }
    if (!mod(acc).is_zero()) {
      out.residual_ok = false;
      out.note = "residual of " + f.to_string() + " is nonzero";
      break;
    }
  }
  return out;
}

VerifyReport verify_branch(const RurBranch& branch, const std::vector<MvPoly>& F, const RingPtr& ring,
                           std::size_t samples, std::uint64_t seed) {
  VerifyReport rep;
  rep.requested = samples;
  const RingPtr params = ring->param_ring();
  if (samples == 0) {
    rep.status = "vacuous";
    return rep;
  }
  if (is_empty(branch.cs, params)) {
    rep.status = "vacuous";
    return rep;
  }
  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    auto pt = sample_point(branch.cs, params, rng);
    if (!pt) break;
    rep.samples.push_back(check_point(branch, F, *pt));
  }
  if (rep.samples.empty()) {
    rep.status = "unsampled";
    return rep;
  }
  rep.status = "ok";
  for (const auto& c : rep.samples)
    if (!c.ok()) rep.status = "failed";
  return rep;
}

}  // namespace prur
