#include "prur/groebner.hpp"

#include <algorithm>

#include "prur/budget.hpp"
#include "prur/errors.hpp"
#include "prur/polygcd.hpp"

namespace prur {

namespace {

int compare_lead(const Ring& ring, const Monomial& a, const Monomial& b, GbMode mode) {
  return mode == GbMode::ring ? ring.compare(a, b) : ring.compare_vars(a, b);
}

bool lead_is_one(const MvPoly& p, GbMode mode) {
  return mode == GbMode::ring ? p.is_constant() : !p.has_vars();
}

MvPoly drop_leading(const MvPoly& p, std::size_t count) {
  if (count == 0) return p;
  charge_work(kTermWork * p.size());
  std::vector<Term> rest(p.terms().begin() + static_cast<std::ptrdiff_t>(count), p.terms().end());
  return MvPoly::from_sorted_terms(p.ring(), std::move(rest));
}

// Multiplies a polynomial of the full ring by an element of the parameter ring.
MvPoly scale_by_param(const MvPoly& p, const MvPoly& a) {
  if (a.is_constant()) return p * a.constant_value();
  return p * lift_param_poly(a, p.ring()->one(), p.ring());
}

Integer integer_content(const std::vector<Term>& a, const std::vector<Term>& b) {
  Integer g = 0;
  for (const auto* v : {&a, &b})
    for (const auto& t : *v) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_num_mpz_t());
      if (g == 1) return g;
    }
  return g;
}

// Full reduction over Q with fraction-free steps. Invariant: f is congruent to
// (p + R) * weight modulo the divisors. Divisors have integer coefficients.
MvPoly reduce_ring(const MvPoly& f, const std::vector<const MvPoly*>& G, bool exact) {
  if (f.is_zero()) return f;
  Rational weight = rational_content(f);
  MvPoly p = f * Rational(1 / weight);
  std::vector<Term> rem;
  unsigned scaled_steps = 0;
  // Terms of p before `done` already moved to rem.
  std::size_t done = 0;
  while (done < p.size()) {
    const Term& lt = p.terms()[done];
    const MvPoly* div = nullptr;
    for (const MvPoly* g : G) {
      if (monomial::divides(g->leading_monomial(), lt.mono)) {
        div = g;
        break;
      }
    }
    if (div == nullptr) {
      rem.push_back(lt);
      ++done;
      continue;
    }
    p = drop_leading(p, done);
    done = 0;
    const Term& lead = p.leading_term();
    const Integer& c = lead.coeff.get_num();
    const Integer& l = div->leading_coefficient().get_num();
    Integer h;
    mpz_gcd(h.get_mpz_t(), c.get_mpz_t(), l.get_mpz_t());
    const Integer a = l / h;
    const Integer b = c / h;
    const Monomial m = monomial::divide(lead.mono, div->leading_monomial());
    if (a != 1) {
      charge_work(kTermWork * (p.size() + rem.size()));
      p *= Rational(a);
      for (auto& t : rem) t.coeff *= a;
      weight /= a;
      ++scaled_steps;
    }
    p = add_scaled(p, Rational(-b), m, *div);
    if (scaled_steps >= 8) {
      scaled_steps = 0;
      const Integer g = integer_content(p.terms(), rem);
      if (g > 1) {
        p *= Rational(1, g);
        for (auto& t : rem) t.coeff /= g;
        weight *= g;
      }
    }
  }
  MvPoly r = MvPoly::from_sorted_terms(f.ring(), std::move(rem));
  return exact ? r * weight : primitive_integer_part(r);
}

MvPoly param_content(const MvPoly& p) {
  const RingPtr pr = p.ring()->param_ring();
  MvPoly c(pr);
  for (const auto& b : var_blocks(p)) {
    c = gcd(c, b.coeff);
    if (c.is_constant()) break;
  }
  return c;
}

MvPoly divide_by_param(const MvPoly& p, const MvPoly& c) {
  if (c.is_constant()) return p * Rational(1 / c.constant_value());
  std::vector<VarBlock> blocks = var_blocks(p);
  for (auto& b : blocks) b.coeff = divide_exact(b.coeff, c);
  return from_var_blocks(blocks, p.ring());
}

// Field-mode normalization: primitive over Z[U].
MvPoly primitive_over_params(const MvPoly& p) {
  if (p.is_zero()) return p;
  const MvPoly c = param_content(p);
  MvPoly q = c.is_constant() ? p : divide_by_param(p, c);
  return primitive_integer_part(q);
}

struct FieldDivisor {
  const MvPoly* poly;
  Monomial lm;
  MvPoly lc;
};

Division reduce_field(const MvPoly& f, const std::vector<FieldDivisor>& G, bool keep_quotients) {
  const RingPtr& full = f.ring();
  const RingPtr pr = full->param_ring();
  Division out{{}, MvPoly(full), MvPoly(pr, Rational(1))};
  if (keep_quotients) out.quotients.assign(G.size(), MvPoly(full));
  MvPoly p = f;
  std::vector<Term> rem;
  std::size_t done = 0;
  while (done < p.size()) {
    VarBlock lb = leading_var_block(p, done);
    std::size_t which = G.size();
    for (std::size_t i = 0; i < G.size(); ++i) {
      if (monomial::divides(G[i].lm, lb.var_part)) {
        which = i;
        break;
      }
    }
    if (which == G.size()) {
      for (std::size_t k = 0; k < lb.coeff.size(); ++k) rem.push_back(p.terms()[done + k]);
      done += lb.coeff.size();
      continue;
    }
    p = drop_leading(p, done);
    done = 0;
    const FieldDivisor& d = G[which];
    MvPoly a(pr, Rational(1));
    MvPoly b = lb.coeff;
    if (d.lc.is_constant()) {
      b *= Rational(1 / d.lc.constant_value());
    } else {
      const MvPoly h = gcd(d.lc, lb.coeff);
      a = divide_exact(d.lc, h);
      b = divide_exact(lb.coeff, h);
    }
    const Monomial m = monomial::divide(lb.var_part, d.lm);
    if (!a.is_one()) {
      p = scale_by_param(p, a);
      MvPoly r = MvPoly::from_sorted_terms(full, std::move(rem));
      r = scale_by_param(r, a);
      rem = r.terms();
      out.denominator *= a;
      for (auto& q : out.quotients) q = scale_by_param(q, a);
    }
    const MvPoly shift = lift_param_poly(b, m, full);
    p -= shift * *d.poly;
    if (keep_quotients) out.quotients[which] += shift;
  }
  out.remainder = MvPoly::from_sorted_terms(full, std::move(rem));
  if (!keep_quotients && !out.denominator.is_constant()) {
    MvPoly c = gcd(param_content(out.remainder), out.denominator);
    if (!c.is_constant()) {
      out.remainder = divide_by_param(out.remainder, c);
      out.denominator = divide_exact(out.denominator, c);
    }
  }
  const Rational dc = rational_content(out.denominator);
  if (dc != 1) {
    const Rational s = 1 / dc;
    out.denominator *= s;
    out.remainder *= s;
    for (auto& q : out.quotients) q *= s;
  }
  return out;
}

std::vector<FieldDivisor> field_divisors(const std::vector<const MvPoly*>& G) {
  std::vector<FieldDivisor> out;
  out.reserve(G.size());
  for (const MvPoly* g : G) {
    VarBlock b = leading_var_block(*g);
    out.push_back(FieldDivisor{g, std::move(b.var_part), std::move(b.coeff)});
  }
  return out;
}

MvPoly reduce(const MvPoly& f, const std::vector<const MvPoly*>& G, GbMode mode) {
  if (mode == GbMode::ring) return reduce_ring(f, G, false);
  return primitive_over_params(reduce_field(f, field_divisors(G), false).remainder);
}

MvPoly normalize(const MvPoly& p, GbMode mode) {
  return mode == GbMode::ring ? primitive_integer_part(p) : primitive_over_params(p);
}

MvPoly s_polynomial(const MvPoly& f, const MvPoly& g, GbMode mode) {
  const Monomial lf = lead_monomial(f, mode);
  const Monomial lg = lead_monomial(g, mode);
  const Monomial l = monomial::lcm(lf, lg);
  const Monomial mf = monomial::divide(l, lf);
  const Monomial mg = monomial::divide(l, lg);
  if (mode == GbMode::ring) {
    const Rational& cf = f.leading_coefficient();
    const Rational& cg = g.leading_coefficient();
    return add_scaled(f.mul_term(mf, cg), -cf, mg, g);
  }
  const MvPoly cf = lead_coefficient(f, mode);
  const MvPoly cg = lead_coefficient(g, mode);
  const MvPoly h = gcd(cf, cg);
  const RingPtr& full = f.ring();
  return lift_param_poly(divide_exact(cg, h), mf, full) * f - lift_param_poly(divide_exact(cf, h), mg, full) * g;
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

class Engine {
 public:
  Engine(RingPtr ring, GbMode mode) : ring_(std::move(ring)), mode_(mode) {}

  // Returns false when the ideal became the unit ideal.
  bool add(MvPoly h) {
    h = reduce(h, active_polys(), mode_);
    if (h.is_zero()) return true;
    h = normalize(h, mode_);
    if (lead_is_one(h, mode_)) {
      unit_ = true;
      return false;
    }
    update(std::move(h));
    return true;
  }

  bool run() {
    while (!pairs_.empty()) {
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs_.size(); ++k) {
        const int c = compare_lead(*ring_, pairs_[k].lcm, pairs_[best].lcm, mode_);
        if (c < 0 || (c == 0 && std::tie(pairs_[k].j, pairs_[k].i) < std::tie(pairs_[best].j, pairs_[best].i)))
          best = k;
      }
      Pair p = pairs_[best];
      pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
      charge_steps(1);
      if (!add(s_polynomial(polys_[p.i], polys_[p.j], mode_))) return false;
    }
    return true;
  }

  GroebnerBasis result() {
    GroebnerBasis gb{ring_, mode_, true, {}};
    if (unit_) {
      gb.gens.push_back(MvPoly(ring_, Rational(1)));
      return gb;
    }
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < polys_.size(); ++i)
      if (active_[i]) idx.push_back(i);
    std::sort(idx.begin(), idx.end(), [this](std::size_t a, std::size_t b) {
      return compare_lead(*ring_, lms_[a], lms_[b], mode_) < 0;
    });
    std::vector<std::size_t> minimal;
    for (std::size_t i : idx) {
      bool redundant = false;
      for (std::size_t k : minimal) redundant = redundant || monomial::divides(lms_[k], lms_[i]);
      if (!redundant) minimal.push_back(i);
    }
    for (std::size_t i : minimal) {
      std::vector<const MvPoly*> others;
      for (std::size_t k : minimal)
        if (k != i) others.push_back(&polys_[k]);
      // The leading term cannot be reduced, so only the tail changes.
      gb.gens.push_back(normalize(reduce(polys_[i], others, mode_), mode_));
    }
    return gb;
  }

 private:
  std::vector<const MvPoly*> active_polys() const {
    std::vector<const MvPoly*> out;
    for (std::size_t i = 0; i < polys_.size(); ++i)
      if (active_[i]) out.push_back(&polys_[i]);
    return out;
  }

  bool disjoint(const Monomial& a, const Monomial& b) const {
    return monomial::coprime(a, b, 0, mode_ == GbMode::ring ? a.size() : ring_->num_vars());
  }

  // Gebauer-Moeller update.
  void update(MvPoly h) {
    const std::size_t hi = polys_.size();
    const Monomial lh = lead_monomial(h, mode_);
    polys_.push_back(std::move(h));
    lms_.push_back(lh);
    active_.push_back(true);

    std::vector<Pair> C;
    for (std::size_t g = 0; g < hi; ++g)
      if (active_[g]) C.push_back(Pair{g, hi, monomial::lcm(lms_[g], lh)});
    std::vector<Pair> D;
    for (std::size_t k = 0; k < C.size(); ++k) {
      const Pair& p = C[k];
      bool keep = disjoint(lms_[p.i], lh);
      if (!keep) {
        keep = true;
        for (std::size_t q = k + 1; q < C.size() && keep; ++q) keep = !monomial::divides(C[q].lcm, p.lcm);
        for (std::size_t q = 0; q < D.size() && keep; ++q) keep = !monomial::divides(D[q].lcm, p.lcm);
      }
      if (keep) D.push_back(p);
    }
    std::vector<Pair> next;
    for (auto& p : pairs_) {
      const bool drop = monomial::divides(lh, p.lcm) && monomial::lcm(lms_[p.i], lh) != p.lcm &&
                        monomial::lcm(lms_[p.j], lh) != p.lcm;
      if (!drop) next.push_back(std::move(p));
    }
    for (auto& p : D)
      if (!disjoint(lms_[p.i], lh)) next.push_back(std::move(p));
    pairs_ = std::move(next);
    for (std::size_t g = 0; g < hi; ++g)
      if (active_[g] && monomial::divides(lh, lms_[g])) active_[g] = false;
  }

  RingPtr ring_;
  GbMode mode_;
  bool unit_ = false;
  std::vector<MvPoly> polys_;
  std::vector<Monomial> lms_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
};

}  // namespace

bool GroebnerBasis::is_unit() const {
  return gens.size() == 1 && lead_is_one(gens[0], mode);
}

Monomial lead_monomial(const MvPoly& p, GbMode mode) {
  if (mode == GbMode::ring) return p.leading_monomial();
  Monomial m = p.leading_monomial();
  const std::size_t n = p.ring()->num_vars();
  std::fill(m.begin() + static_cast<std::ptrdiff_t>(n), m.end(), Exponent{0});
  return m;
}

MvPoly lead_coefficient(const MvPoly& p, GbMode mode) {
  if (mode == GbMode::ring) return MvPoly(p.ring()->param_ring(), p.leading_coefficient());
  return leading_var_block(p).coeff;
}

GroebnerBasis buchberger(const std::vector<MvPoly>& F, RingPtr ring, GbMode mode) {
  std::vector<MvPoly> input;
  for (const auto& f : F) {
    if (!same_ring(f.ring(), ring)) throw ContextError("generator does not belong to the basis ring");
    if (!f.is_zero()) input.push_back(normalize(f, mode));
  }
  std::sort(input.begin(), input.end(), [&](const MvPoly& a, const MvPoly& b) {
    return compare_lead(*ring, lead_monomial(a, mode), lead_monomial(b, mode), mode) < 0;
  });
  Engine engine(ring, mode);
  bool ok = true;
  for (auto& f : input) {
    if (!(ok = engine.add(std::move(f)))) break;
  }
  if (ok) engine.run();
  return engine.result();
}

MvPoly normal_form(const MvPoly& f, const GroebnerBasis& G) {
  if (!same_ring(f.ring(), G.ring)) throw ContextError("normal form across rings");
  std::vector<const MvPoly*> gens;
  for (const auto& g : G.gens) gens.push_back(&g);
  if (G.mode == GbMode::ring) return reduce_ring(f, gens, true);
  return reduce(f, gens, GbMode::field);
}

Division mv_divide(const MvPoly& f, const std::vector<MvPoly>& divisors, bool keep_quotients) {
  std::vector<const MvPoly*> gens;
  for (const auto& g : divisors) {
    require_same_ring(f, g);
    if (g.is_zero()) throw DomainError("division by the zero polynomial");
    gens.push_back(&g);
  }
  return reduce_field(f, field_divisors(gens), keep_quotients);
}

bool radical_membership(const MvPoly& f, const std::vector<MvPoly>& E) {
  return radical_membership(f, buchberger(E, f.ring(), GbMode::ring));
}

bool radical_membership(const MvPoly& f, const GroebnerBasis& E) {
  if (E.is_unit()) return true;
  if (f.is_zero()) return true;
  const MvPoly nf = normal_form(f, E);
  if (nf.is_zero()) return true;
  if (nf.is_constant() || E.is_zero_ideal()) return false;
  const Ring& pr = *f.ring();
  if (pr.num_vars() != 0) throw ContextError("radical membership expects parameter polynomials");
  RingPtr ry = Ring::make({"_y"}, pr.params(), MonomialOrder::grevlex, pr.param_order());
  std::vector<MvPoly> gens;
  for (const auto& e : E.gens) gens.push_back(map_to_ring(e, ry));
  gens.push_back(MvPoly(ry, Rational(1)) - MvPoly::variable(ry, 0) * map_to_ring(nf, ry));
  return buchberger(gens, ry, GbMode::ring).is_unit();
}

bool is_groebner_basis(const GroebnerBasis& G) {
  std::vector<const MvPoly*> gens;
  for (const auto& g : G.gens) gens.push_back(&g);
  for (std::size_t i = 0; i < G.gens.size(); ++i)
    for (std::size_t j = i + 1; j < G.gens.size(); ++j)
      if (!reduce(s_polynomial(G.gens[i], G.gens[j], G.mode), gens, G.mode).is_zero()) return false;
  return true;
}

}  // namespace prur
