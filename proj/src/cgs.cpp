#include "prur/cgs.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "prur/budget.hpp"
#include "prur/errors.hpp"
#include "prur/polygcd.hpp"

namespace prur {

namespace {

std::string ring_key(const Ring& r) {
  std::string k;
  for (const auto& s : r.vars()) k += s + ",";
  k += ";";
  for (const auto& s : r.params()) k += s + ",";
  k += std::string(to_string(r.var_order())) + std::string(to_string(r.param_order()));
  return k;
}

bool poly_less(const MvPoly& a, const MvPoly& b) {
  if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
  if (a.size() != b.size()) return a.size() < b.size();
  return a.to_string() < b.to_string();
}

void sort_unique(std::vector<MvPoly>& v) {
  std::sort(v.begin(), v.end(), poly_less);
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

ConstructibleSet ConstructibleSet::whole(const RingPtr& param_ring) {
  return ConstructibleSet{{}, {MvPoly(param_ring, Rational(1))}};
}

bool ConstructibleSet::contains(std::span<const Rational> point) const {
  for (const auto& e : E)
    if (sgn(evaluate(e, point)) != 0) return false;
  for (const auto& n : N)
    if (sgn(evaluate(n, point)) != 0) return true;
  return false;
}

std::string ConstructibleSet::to_string() const {
  auto list = [](const std::vector<MvPoly>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].to_string();
    return s + "}";
  };
  return "(" + (E.empty() ? std::string("{0}") : list(E)) + ", " + list(N) + ")";
}

const GroebnerBasis& basis_of(const std::vector<MvPoly>& E, const RingPtr& param_ring) {
  static std::mutex mutex;
  static std::map<std::string, GroebnerBasis> cache;
  std::vector<std::string> parts;
  for (const auto& e : E)
    if (!e.is_zero()) parts.push_back(primitive_integer_part(e).to_string());
  std::sort(parts.begin(), parts.end());
  parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
  std::string key = ring_key(*param_ring) + "|";
  for (const auto& p : parts) key += p + "|";
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  std::vector<MvPoly> gens;
  for (const auto& e : E) gens.push_back(map_to_ring(e, param_ring));
  GroebnerBasis gb = buchberger(gens, param_ring, GbMode::ring);
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(std::move(key), std::move(gb)).first->second;
}

bool is_empty(const ConstructibleSet& cs, const RingPtr& param_ring) {
  if (cs.N.empty()) return true;
  if (cs.E.empty() || std::all_of(cs.E.begin(), cs.E.end(), [](const MvPoly& e) { return e.is_zero(); }))
    return std::all_of(cs.N.begin(), cs.N.end(), [](const MvPoly& n) { return n.is_zero(); });
  const GroebnerBasis& gb = basis_of(cs.E, param_ring);
  if (gb.is_unit()) return true;
  // Cheap pass first: a nonzero constant normal form settles nonemptiness.
  std::vector<MvPoly> pending;
  for (const auto& n : cs.N) {
    const MvPoly nf = normal_form(map_to_ring(n, param_ring), gb);
    if (nf.is_zero()) continue;
    if (nf.is_constant()) return false;
    pending.push_back(nf);
  }
  for (const auto& n : pending)
    if (!radical_membership(n, gb)) return false;
  return true;
}

std::vector<MvPoly> times(const std::vector<MvPoly>& N, const std::vector<MvPoly>& F) {
  std::vector<MvPoly> out;
  for (const auto& f : F) {
    if (f.is_zero()) continue;
    for (const auto& n : N) {
      if (n.is_zero()) continue;
      out.push_back(zero_set_product(n, f));
    }
  }
  sort_unique(out);
  return out;
}

ConstructibleSet times(const ConstructibleSet& cs, const MvPoly& f) { return ConstructibleSet{cs.E, times(cs.N, {f})}; }

ConstructibleSet adjoin(const ConstructibleSet& cs, const MvPoly& f) {
  ConstructibleSet out = cs;
  if (!f.is_zero()) out.E.push_back(primitive_integer_part(f));
  sort_unique(out.E);
  return out;
}

ConstructibleSet simplify(const ConstructibleSet& cs, const RingPtr& param_ring) {
  ConstructibleSet out;
  const GroebnerBasis& gb = basis_of(cs.E, param_ring);
  out.E = gb.gens;
  if (gb.is_unit()) return out;
  for (const auto& n : cs.N) {
    if (n.is_zero()) continue;
    if (!gb.is_zero_ideal() && normal_form(n, gb).is_zero()) continue;
    out.N.push_back(primitive_integer_part(n));
  }
  sort_unique(out.N);
  return out;
}

bool subset_of(const ConstructibleSet& a, const ConstructibleSet& b, const RingPtr& param_ring) {
  // a \ b = union over e in E_b of (E_a, N_a x e), together with (E_a u N_b, N_a).
  for (const auto& e : b.E)
    if (!is_empty(ConstructibleSet{a.E, times(a.N, {e})}, param_ring)) return false;
  ConstructibleSet rest = a;
  for (const auto& n : b.N) rest.E.push_back(n);
  return is_empty(rest, param_ring);
}

bool same_set(const ConstructibleSet& a, const ConstructibleSet& b, const RingPtr& param_ring) {
  return subset_of(a, b, param_ring) && subset_of(b, a, param_ring);
}

std::optional<ConstructibleSet> try_merge(const ConstructibleSet& a, const ConstructibleSet& b,
                                          const RingPtr& param_ring) {
  // A coprime base over both sets splits factors of N_a along b's equations.
  std::vector<MvPoly> pool = a.N;
  pool.insert(pool.end(), b.E.begin(), b.E.end());
  pool.insert(pool.end(), b.N.begin(), b.N.end());
  for (const auto& p : coprime_factors(pool)) {
    ConstructibleSet c{a.E, {}};
    bool changed = false;
    for (const auto& n : a.N) {
      auto q = try_divide_exact(n, p);
      changed = changed || q.has_value();
      c.N.push_back(q ? primitive_integer_part(*q) : n);
    }
    if (!changed) continue;
    sort_unique(c.N);
    // a is inside c by construction; c \ a is (E_a u N_a, N_c).
    ConstructibleSet gap{a.E, c.N};
    gap.E.insert(gap.E.end(), a.N.begin(), a.N.end());
    if (subset_of(gap, b, param_ring) && subset_of(b, c, param_ring)) return c;
  }
  return std::nullopt;
}

std::vector<ConstructibleSet> merge_sets(std::vector<ConstructibleSet> sets, const RingPtr& param_ring) {
  bool merged = true;
  while (merged) {
    merged = false;
    for (std::size_t i = 0; i < sets.size() && !merged; ++i)
      for (std::size_t j = 0; j < sets.size() && !merged; ++j) {
        if (i == j) continue;
        if (auto c = try_merge(sets[i], sets[j], param_ring)) {
          sets[i] = std::move(*c);
          sets.erase(sets.begin() + static_cast<std::ptrdiff_t>(j));
          merged = true;
        }
      }
  }
  return sets;
}

BranchKind classify(const std::vector<MvPoly>& basis) {
  if (basis.empty()) return BranchKind::positive_dimensional;
  const std::size_t n = basis.front().ring()->num_vars();
  std::vector<bool> pure(n, false);
  for (const auto& g : basis) {
    const Monomial lm = lead_monomial(g, GbMode::field);
    if (monomial::is_one(lm)) return BranchKind::no_solution;
    std::size_t nonzero = 0;
    std::size_t which = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (lm[i] != 0) {
        ++nonzero;
        which = i;
      }
    if (nonzero == 1) pure[which] = true;
  }
  return std::all_of(pure.begin(), pure.end(), [](bool b) { return b; }) ? BranchKind::zero_dimensional
                                                                           : BranchKind::positive_dimensional;
}

namespace {

class CgsBuilder {
 public:
  explicit CgsBuilder(RingPtr full) : full_(std::move(full)), params_(full_->param_ring()) {}

  void run(const ConstructibleSet& cs, const std::vector<MvPoly>& F) {
    charge_steps(1);
    if (is_empty(cs, params_)) return;
    std::vector<MvPoly> gens = F;
    for (const auto& e : cs.E) gens.push_back(map_to_ring(e, full_));
    const GroebnerBasis G = buchberger(gens, full_, GbMode::ring);
    if (G.is_unit()) {
      emit(cs, {MvPoly(full_, Rational(1))});
      return;
    }
    std::vector<MvPoly> Gr;
    std::vector<MvPoly> G0;
    for (const auto& g : G.gens) {
      if (g.has_vars()) {
        G0.push_back(g);
      } else {
        Gr.push_back(map_to_ring(g, params_));
      }
    }
    if (!Gr.empty()) {
      ConstructibleSet none{cs.E, times(cs.N, Gr)};
      if (!is_empty(none, params_)) emit(none, {MvPoly(full_, Rational(1))});
    }
    const ConstructibleSet base{Gr, cs.N};
    if (is_empty(base, params_)) return;
    if (G0.empty()) {
      emit(base, {});
      return;
    }
    const std::vector<MvPoly> Gm = dickson_basis(G0);
    std::vector<MvPoly> lcs;
    for (const auto& g : Gm) lcs.push_back(leading_var_block(g).coeff);
    const std::vector<MvPoly> factors = coprime_factors(lcs);
    MvPoly h(params_, Rational(1));
    for (const auto& p : factors) h *= p;
    const ConstructibleSet main{Gr, times(cs.N, {h})};
    if (!is_empty(main, params_)) emit(main, Gm);
    MvPoly earlier(params_, Rational(1));
    for (const auto& p : factors) {
      ConstructibleSet sub{Gr, times(cs.N, {earlier})};
      sub = adjoin(sub, p);
      run(sub, G0);
      earlier *= p;
    }
  }

  std::vector<CgsBranch> take() { return std::move(out_); }

 private:
  // Ascending by leading monomial; keep g unless an earlier kept LM_X divides
  // its LM_X.
  static std::vector<MvPoly> dickson_basis(std::vector<MvPoly> G0) {
    const Ring& ring = *G0.front().ring();
    std::stable_sort(G0.begin(), G0.end(), [&ring](const MvPoly& a, const MvPoly& b) {
      return ring.compare(a.leading_monomial(), b.leading_monomial()) < 0;
    });
    std::vector<MvPoly> kept;
    std::vector<Monomial> lms;
    for (auto& g : G0) {
      const Monomial lm = lead_monomial(g, GbMode::field);
      bool redundant = false;
      for (const auto& k : lms) redundant = redundant || monomial::divides(k, lm);
      if (redundant) continue;
      lms.push_back(lm);
      kept.push_back(std::move(g));
    }
    return kept;
  }

  void emit(const ConstructibleSet& cs, std::vector<MvPoly> basis) {
    CgsBranch b{cs, std::move(basis), BranchKind::positive_dimensional};
    std::sort(b.cs.E.begin(), b.cs.E.end(), poly_less);
    b.kind = classify(b.basis);
    out_.push_back(std::move(b));
  }

  RingPtr full_;
  RingPtr params_;
  std::vector<CgsBranch> out_;
};

}  // namespace

std::vector<CgsBranch> minimal_cgs(const std::vector<MvPoly>& F, const ConstructibleSet& cs0) {
  if (F.empty()) throw PreconditionError("comprehensive system of an empty generator list");
  const RingPtr& full = F.front().ring();
  for (const auto& f : F) require_same_ring(f, F.front());
  CgsBuilder builder(full);
  std::vector<MvPoly> gens;
  for (const auto& f : F)
    if (!f.is_zero()) gens.push_back(f);
  if (gens.empty()) {
    const RingPtr params = full->param_ring();
    if (is_empty(cs0, params)) return {};
    return {CgsBranch{cs0, {}, BranchKind::positive_dimensional}};
  }
  builder.run(cs0, gens);
  return builder.take();
}

std::vector<CgsBranch> zero_dim_branches(const std::vector<CgsBranch>& branches) {
  std::vector<CgsBranch> out;
  for (const auto& b : branches)
    if (b.kind == BranchKind::zero_dimensional) out.push_back(b);
  return out;
}

std::vector<Monomial> quotient_basis(const std::vector<MvPoly>& basis) {
  if (classify(basis) != BranchKind::zero_dimensional)
    throw PreconditionError("quotient basis of a branch that is not zero-dimensional");
  const Ring& ring = *basis.front().ring();
  const std::size_t n = ring.num_vars();
  std::vector<Monomial> lms;
  std::vector<unsigned> bound(n, 0);
  for (const auto& g : basis) {
    lms.push_back(lead_monomial(g, GbMode::field));
    const Monomial& lm = lms.back();
    for (std::size_t i = 0; i < n; ++i) {
      const bool pure = lm[i] != 0 && monomial::block_degree(lm, 0, n) == lm[i];
      if (pure && (bound[i] == 0 || lm[i] < bound[i])) bound[i] = lm[i];
    }
  }
  std::vector<Monomial> out;
  Monomial m = ring.one();
  while (true) {
    bool divisible = false;
    for (const auto& lm : lms) divisible = divisible || monomial::divides(lm, m);
    if (!divisible) out.push_back(m);
    std::size_t i = 0;
    while (i < n && m[i] + 1U >= bound[i]) {
      m[i] = 0;
      ++i;
    }
    if (i == n) break;
    ++m[i];
  }
  std::sort(out.begin(), out.end(), [&ring](const Monomial& a, const Monomial& b) { return ring.compare(a, b) < 0; });
  return out;
}

std::vector<Monomial> quotient_basis(const CgsBranch& branch) { return quotient_basis(branch.basis); }

}  // namespace prur
