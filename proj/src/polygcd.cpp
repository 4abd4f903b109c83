#include "prur/polygcd.hpp"

#include <algorithm>
#include <map>

#include "prur/budget.hpp"
#include "prur/errors.hpp"

namespace prur {

namespace {

Monomial monomial_content(const MvPoly& p) {
  Monomial m = p.terms().front().mono;
  for (const auto& t : p.terms()) {
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], t.mono[i]);
  }
  return m;
}

// Monomial orders are multiplicative, so dividing every term by a common
// monomial keeps the term order.
MvPoly divide_by_monomial(const MvPoly& p, const Monomial& m) {
  if (monomial::is_one(m)) return p;
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) out.push_back(Term{monomial::divide(t.mono, m), t.coeff});
  return MvPoly::from_sorted_terms(p.ring(), std::move(out));
}

MvPoly leading_coefficient_in(const MvPoly& p, std::size_t index) {
  const unsigned d = p.degree(index);
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    if (t.mono[index] != d) continue;
    Term c = t;
    c.mono[index] = 0;
    out.push_back(std::move(c));
  }
  return MvPoly::from_terms(p.ring(), std::move(out));
}

MvPoly one_of(const MvPoly& p) { return MvPoly(p.ring(), Rational(1)); }

// Subresultant PRS of two polynomials primitive in `index`.
MvPoly prs_gcd(MvPoly a, MvPoly b, std::size_t index) {
  if (a.degree(index) < b.degree(index)) std::swap(a, b);
  MvPoly g = one_of(a);
  MvPoly h = one_of(a);
  while (true) {
    const unsigned delta = a.degree(index) - b.degree(index);
    MvPoly r = pseudo_remainder(a, b, index);
    if (r.is_zero()) return primitive_part_in(b, index);
    if (r.degree(index) == 0) return one_of(a);
    a = std::move(b);
    b = divide_exact(r, g * h.pow(delta));
    g = leading_coefficient_in(a, index);
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      h = divide_exact(g.pow(delta), h.pow(delta - 1));
    }
  }
}

MvPoly gcd_nonzero(MvPoly a, MvPoly b) {
  if (a.is_constant() || b.is_constant()) return one_of(a);
  const Monomial ma = monomial_content(a);
  const Monomial mb = monomial_content(b);
  const Monomial m = monomial::gcd(ma, mb);
  a = divide_by_monomial(a, ma);
  b = divide_by_monomial(b, mb);
  const MvPoly mono = MvPoly::term(a.ring(), m, Rational(1));
  if (a.is_constant() || b.is_constant()) return mono;

  const std::size_t n = a.ring()->size();
  std::optional<std::size_t> main;
  unsigned best = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const unsigned da = a.degree(i);
    const unsigned db = b.degree(i);
    if (da == 0 && db == 0) continue;
    if (da == 0) return primitive_integer_part(mono * gcd(a, content_in(b, i)));
    if (db == 0) return primitive_integer_part(mono * gcd(content_in(a, i), b));
    const unsigned cost = std::max(da, db);
    if (!main || cost < best) {
      main = i;
      best = cost;
    }
  }
  const std::size_t v = *main;

  if (a.total_degree() < b.total_degree()) std::swap(a, b);
  if (auto q = try_divide_exact(a, b)) return primitive_integer_part(mono * b);

  const MvPoly ca = content_in(a, v);
  const MvPoly cb = content_in(b, v);
  const MvPoly c = gcd(ca, cb);
  const MvPoly g = prs_gcd(divide_exact(a, ca), divide_exact(b, cb), v);
  return primitive_integer_part(mono * c * g);
}

}  // namespace

std::vector<MvPoly> coefficients_in(const MvPoly& p, std::size_t index) {
  std::vector<std::vector<Term>> buckets(p.degree(index) + 1);
  for (const auto& t : p.terms()) {
    Term c = t;
    const unsigned e = c.mono[index];
    c.mono[index] = 0;
    buckets[e].push_back(std::move(c));
  }
  std::vector<MvPoly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(MvPoly::from_terms(p.ring(), std::move(b)));
  return out;
}

MvPoly pseudo_remainder(const MvPoly& a, const MvPoly& b, std::size_t index) {
  require_same_ring(a, b);
  const unsigned db = b.degree(index);
  if (b.is_zero()) throw DomainError("pseudo-remainder by zero");
  if (db == 0) throw PreconditionError("pseudo-remainder divisor does not involve the main symbol");
  const MvPoly lcb = leading_coefficient_in(b, index);
  MvPoly r = a;
  int pending = static_cast<int>(a.degree(index)) - static_cast<int>(db) + 1;
  if (pending < 0) pending = 0;
  while (!r.is_zero() && r.degree(index) >= db) {
    const unsigned dr = r.degree(index);
    MvPoly lcr = leading_coefficient_in(r, index);
    Monomial shift = r.ring()->one();
    shift[index] = static_cast<Exponent>(dr - db);
    r = lcb * r - lcr.mul_term(shift, Rational(1)) * b;
    --pending;
  }
  if (pending > 0) r *= lcb.pow(static_cast<unsigned>(pending));
  return r;
}

MvPoly gcd(const MvPoly& a, const MvPoly& b) {
  require_same_ring(a, b);
  if (a.is_zero()) return primitive_integer_part(b);
  if (b.is_zero()) return primitive_integer_part(a);
  return gcd_nonzero(a, b);
}

MvPoly lcm(const MvPoly& a, const MvPoly& b) {
  if (a.is_zero() || b.is_zero()) return MvPoly(a.ring());
  return primitive_integer_part(divide_exact(a, gcd(a, b)) * b);
}

MvPoly content_in(const MvPoly& p, std::size_t index) {
  if (p.is_zero()) return p;
  std::vector<MvPoly> coeffs = coefficients_in(p, index);
  std::erase_if(coeffs, [](const MvPoly& c) { return c.is_zero(); });
  std::sort(coeffs.begin(), coeffs.end(), [](const MvPoly& x, const MvPoly& y) { return x.size() < y.size(); });
  MvPoly c = primitive_integer_part(coeffs.front());
  for (std::size_t i = 1; i < coeffs.size() && !c.is_constant(); ++i) c = gcd(c, coeffs[i]);
  return c.is_constant() ? one_of(p) : c;
}

MvPoly primitive_part_in(const MvPoly& p, std::size_t index) {
  if (p.is_zero()) return p;
  return primitive_integer_part(divide_exact(p, content_in(p, index)));
}

namespace {

void yun(const MvPoly& q, std::size_t v, std::vector<std::pair<MvPoly, unsigned>>& out) {
  const MvPoly df = q.derivative(v);
  const MvPoly a0 = gcd(q, df);
  MvPoly b = divide_exact(q, a0);
  MvPoly c = divide_exact(df, a0);
  MvPoly d = c - b.derivative(v);
  unsigned i = 1;
  while (!b.is_constant()) {
    const MvPoly a = gcd(b, d);
    if (!a.is_constant()) out.emplace_back(a, i);
    b = divide_exact(b, a);
    c = divide_exact(d, a);
    d = c - b.derivative(v);
    ++i;
  }
}

void squarefree_rec(const MvPoly& q, std::vector<std::pair<MvPoly, unsigned>>& out) {
  if (q.is_constant()) return;
  std::size_t v = 0;
  while (!q.involves(v)) ++v;
  const MvPoly c = content_in(q, v);
  yun(primitive_integer_part(divide_exact(q, c)), v, out);
  squarefree_rec(c, out);
}

bool poly_less(const MvPoly& a, const MvPoly& b) {
  if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  for (std::size_t i = 0; i < std::min(ta.size(), tb.size()); ++i) {
    const int c = a.ring()->compare(ta[i].mono, tb[i].mono);
    if (c != 0) return c < 0;
    if (ta[i].coeff != tb[i].coeff) return ta[i].coeff < tb[i].coeff;
  }
  return ta.size() < tb.size();
}

}  // namespace

std::vector<std::pair<MvPoly, unsigned>> squarefree_factors(const MvPoly& p) {
  if (p.is_zero()) throw DomainError("squarefree decomposition of zero");
  std::vector<std::pair<MvPoly, unsigned>> out;
  if (p.is_constant()) return out;
  const Monomial m = monomial_content(p);
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] != 0) out.emplace_back(MvPoly::variable(p.ring(), i), m[i]);
  }
  squarefree_rec(primitive_integer_part(divide_by_monomial(p, m)), out);
  for (auto& f : out) f.first = primitive_integer_part(f.first);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second < b.second;
    return poly_less(a.first, b.first);
  });
  return out;
}

MvPoly squarefree_part(const MvPoly& p) {
  MvPoly r(p.ring(), Rational(1));
  for (const auto& f : squarefree_factors(p)) r *= f.first;
  return r;
}

std::vector<MvPoly> coprime_factors(const std::vector<MvPoly>& polys) {
  std::vector<MvPoly> base;
  for (const auto& p : polys) {
    if (p.is_zero() || p.is_constant()) continue;
    for (const auto& [factor, mult] : squarefree_factors(p)) {
      (void)mult;
      MvPoly f = factor;
      for (std::size_t i = 0; i < base.size() && !f.is_constant(); ++i) {
        const MvPoly g = gcd(base[i], f);
        if (g.is_constant()) continue;
        const MvPoly rest = divide_exact(base[i], g);
        base[i] = g;
        if (!rest.is_constant()) base.push_back(primitive_integer_part(rest));
        f = divide_exact(f, g);
      }
      if (!f.is_constant()) base.push_back(primitive_integer_part(f));
    }
  }
  std::sort(base.begin(), base.end(), poly_less);
  return base;
}

namespace {
// Well under a second of gcd work on the reference machine.
constexpr std::uint64_t kShrinkCap = 500;
}  // namespace

MvPoly squarefree_part_capped(const MvPoly& p) {
  if (auto r = with_work_cap(kShrinkCap, [&] { return squarefree_part(p); })) return *r;
  return primitive_integer_part(p);
}

std::vector<MvPoly> squarefree_factors_capped(const MvPoly& p) {
  auto r = with_work_cap(kShrinkCap, [&] {
    std::vector<MvPoly> out;
    for (auto& [f, m] : squarefree_factors(p)) out.push_back(std::move(f));
    return out;
  });
  if (r) return *r;
  if (p.is_constant()) return {};
  return {primitive_integer_part(p)};
}

MvPoly zero_set_product(const MvPoly& n, const MvPoly& f) {
  auto r = with_work_cap(kShrinkCap, [&] {
    const MvPoly sf = squarefree_part(f);
    return sf.is_constant() ? primitive_integer_part(n) : lcm(n, sf);
  });
  if (r) return *r;
  return primitive_integer_part(n * f);
}

}  // namespace prur
