#include "prur/quotient.hpp"

#include <sstream>

#include "prur/budget.hpp"
#include "prur/errors.hpp"
#include "prur/groebner.hpp"
#include "prur/polygcd.hpp"

namespace prur {

RatFunMatrix::RatFunMatrix(RingPtr param_ring, std::size_t r)
    : ring_(param_ring), r_(r), a_(r * r, RatFun(param_ring)) {}

RatFunMatrix RatFunMatrix::identity(RingPtr param_ring, std::size_t r) {
  RatFunMatrix m(param_ring, r);
  for (std::size_t i = 0; i < r; ++i) m.at(i, i) = RatFun(param_ring, Rational(1));
  return m;
}

RatFunMatrix RatFunMatrix::operator*(const RatFunMatrix& o) const {
  RatFunMatrix out(ring_, r_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t k = 0; k < r_; ++k) {
      const RatFun& x = at(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < r_; ++j) {
        const RatFun& y = o.at(k, j);
        if (!y.is_zero()) out.at(i, j) = out.at(i, j) + x * y;
      }
    }
  return out;
}

RatFunMatrix RatFunMatrix::operator+(const RatFunMatrix& o) const {
  RatFunMatrix out = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + o.a_[i];
  return out;
}

RatFunMatrix RatFunMatrix::scaled(const RatFun& c) const {
  RatFunMatrix out = *this;
  for (auto& x : out.a_) x = x * c;
  return out;
}

RatFun RatFunMatrix::trace() const {
  RatFun t(ring_);
  for (std::size_t i = 0; i < r_; ++i) t = t + at(i, i);
  return t;
}

bool RatFunMatrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

bool RatFunMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = i + 1; j < r_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

std::optional<std::vector<std::vector<Rational>>> RatFunMatrix::specialize(std::span<const Rational> point) const {
  std::vector<std::vector<Rational>> out(r_, std::vector<Rational>(r_));
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < r_; ++j) {
      auto v = at(i, j).evaluate(point);
      if (!v) return std::nullopt;
      out[i][j] = *v;
    }
  return out;
}

std::string RatFunMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < r_; ++i) {
    os << "[";
    for (std::size_t j = 0; j < r_; ++j) os << (j ? ", " : "") << at(i, j).to_string();
    os << "]\n";
  }
  return os.str();
}

QuotientAlgebra::QuotientAlgebra(const CgsBranch& branch)
    : ring_(branch.basis.at(0).ring()),
      params_(ring_->param_ring()),
      gens_(branch.basis),
      B_(quotient_basis(branch)),
      var_matrices_(ring_->num_vars()) {
  for (std::size_t i = 0; i < B_.size(); ++i) index_.emplace(B_[i], i);
}

Coords QuotientAlgebra::coordinates(const MvPoly& f) const {
  Coords out(B_.size(), RatFun(params_));
  if (f.is_zero()) return out;
  const Division d = mv_divide(map_to_ring(f, ring_), gens_, false);
  for (const auto& block : var_blocks(d.remainder)) {
    auto it = index_.find(block.var_part);
    if (it == index_.end()) throw InternalError("remainder leaves the quotient basis");
    out[it->second] = RatFun(block.coeff, d.denominator);
  }
  return out;
}

const RatFunMatrix& QuotientAlgebra::variable_matrix(std::size_t k) {
  std::lock_guard<std::recursive_mutex> lock(mutex_);
  if (!var_matrices_.at(k)) {
    RatFunMatrix M(params_, B_.size());
    const MvPoly x = MvPoly::variable(ring_, k);
    for (std::size_t i = 0; i < B_.size(); ++i) {
      const Coords row = coordinates(x.mul_term(B_[i], Rational(1)));
      for (std::size_t j = 0; j < B_.size(); ++j) M.at(i, j) = row[j];
    }
    var_matrices_[k] = std::move(M);
  }
  return *var_matrices_[k];
}

Coords QuotientAlgebra::times(const Coords& v, const RatFunMatrix& M) {
  Coords out(v.size(), RatFun(M.ring()));
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    for (std::size_t j = 0; j < v.size(); ++j) {
      const RatFun& m = M.at(i, j);
      if (!m.is_zero()) out[j] = out[j] + v[i] * m;
    }
  }
  return out;
}

Coords QuotientAlgebra::monomial_coordinates(const Monomial& m) {
  std::lock_guard<std::recursive_mutex> lock(mutex_);
  auto it = index_.find(m);
  if (it != index_.end()) {
    Coords out(B_.size(), RatFun(params_));
    out[it->second] = RatFun(params_, Rational(1));
    return out;
  }
  auto cached = monomial_coords_.find(m);
  if (cached != monomial_coords_.end()) return cached->second;
  std::size_t k = 0;
  while (m[k] == 0) ++k;
  Monomial lower = m;
  --lower[k];
  Coords out = times(monomial_coordinates(lower), variable_matrix(k));
  monomial_coords_.emplace(m, out);
  return out;
}

RatFunMatrix QuotientAlgebra::mult_matrix(const MvPoly& t) {
  const std::size_t n = ring_->num_vars();
  const MvPoly tt = map_to_ring(t, ring_);
  for (const auto& term : tt.terms())
    if (monomial::block_degree(term.mono, n, ring_->size()) != 0)
      throw PreconditionError("multiplication matrix of an element involving parameters");
  RatFunMatrix M(params_, B_.size());
  for (const auto& term : tt.terms()) {
    if (monomial::total_degree(term.mono) > 1) {
      // General element: rows straight from normal forms.
      RatFunMatrix G(params_, B_.size());
      for (std::size_t i = 0; i < B_.size(); ++i) {
        const Coords row = coordinates(tt.mul_term(B_[i], Rational(1)));
        for (std::size_t j = 0; j < B_.size(); ++j) G.at(i, j) = row[j];
      }
      return G;
    }
  }
  for (const auto& term : tt.terms()) {
    const RatFun c(params_, term.coeff);
    if (monomial::is_one(term.mono)) {
      M = M + RatFunMatrix::identity(params_, B_.size()).scaled(c);
      continue;
    }
    std::size_t k = 0;
    while (term.mono[k] == 0) ++k;
    M = M + variable_matrix(k).scaled(c);
  }
  return M;
}

const std::vector<RatFun>& QuotientAlgebra::basis_traces() {
  std::lock_guard<std::recursive_mutex> lock(mutex_);
  if (!tau_) {
    std::vector<RatFun> tau;
    for (std::size_t l = 0; l < B_.size(); ++l) {
      RatFun s(params_);
      for (std::size_t i = 0; i < B_.size(); ++i) s = s + monomial_coordinates(monomial::multiply(B_[l], B_[i]))[i];
      tau.push_back(std::move(s));
    }
    tau_ = std::move(tau);
  }
  return *tau_;
}

RatFun QuotientAlgebra::trace(const Coords& v) {
  const std::vector<RatFun>& tau = basis_traces();
  RatFun s(params_);
  for (std::size_t l = 0; l < v.size(); ++l)
    if (!v[l].is_zero() && !tau[l].is_zero()) s = s + v[l] * tau[l];
  return s;
}

RatFunMatrix QuotientAlgebra::hermite_form() {
  RatFunMatrix Q(params_, B_.size());
  for (std::size_t i = 0; i < B_.size(); ++i)
    for (std::size_t j = i; j < B_.size(); ++j) {
      Q.at(i, j) = trace(monomial_coordinates(monomial::multiply(B_[i], B_[j])));
      Q.at(j, i) = Q.at(i, j);
    }
  return Q;
}

std::vector<Coords> QuotientAlgebra::power_coords(const MvPoly& t, std::size_t count) {
  const RatFunMatrix M = mult_matrix(t);
  std::vector<Coords> out;
  Coords c(B_.size(), RatFun(params_));
  c[0] = RatFun(params_, Rational(1));
  for (std::size_t i = 0; i < count; ++i) {
    charge_steps(1);
    out.push_back(c);
    if (i + 1 < count) c = times(c, M);
  }
  return out;
}

const QuotientAlgebra::TraceRow& QuotientAlgebra::traces_for(const MvPoly& t, std::size_t count) {
  std::lock_guard<std::recursive_mutex> lock(mutex_);
  const std::string key = t.to_string();
  auto it = trace_rows_.find(key);
  if (it != trace_rows_.end() && it->second.powers.size() >= count) return it->second;
  TraceRow row;
  const std::vector<Coords> pc = power_coords(t, count);
  row.by_var.assign(ring_->num_vars(), {});
  for (const auto& c : pc) {
    row.powers.push_back(trace(c));
    for (std::size_t k = 0; k < ring_->num_vars(); ++k) row.by_var[k].push_back(trace(times(c, variable_matrix(k))));
  }
  trace_rows_[key] = std::move(row);
  return trace_rows_[key];
}

RPoly QuotientAlgebra::char_poly(const MvPoly& t) {
  const TraceRow& row = traces_for(t, B_.size() + 1);
  return newton_char_poly(row.powers, RatFun(params_));
}

RPoly newton_char_poly(const std::vector<RatFun>& p, const RatFun& zero) {
  const std::size_t r = p.size() - 1;
  const RatFun one = coeff_one(zero);
  std::vector<RatFun> e{one};
  for (std::size_t k = 1; k <= r; ++k) {
    RatFun s = zero;
    for (std::size_t i = 1; i <= k; ++i) {
      const RatFun term = e[k - i] * p[i];
      s = (i % 2 == 1) ? s + term : s - term;
    }
    e.push_back(s * Rational(1, static_cast<long>(k)));
  }
  std::vector<RatFun> coeffs(r + 1, zero);
  for (std::size_t k = 0; k <= r; ++k) coeffs[r - k] = (k % 2 == 0) ? e[k] : -e[k];
  return RPoly(zero, std::move(coeffs));
}

RPoly char_poly(const RatFunMatrix& M) {
  const RatFun zero(M.ring());
  std::vector<RatFun> p{RatFun(M.ring(), Rational(static_cast<long>(M.size())))};
  RatFunMatrix power = M;
  for (std::size_t i = 1; i <= M.size(); ++i) {
    p.push_back(power.trace());
    if (i < M.size()) power = power * M;
  }
  return newton_char_poly(p, zero);
}

std::vector<std::pair<ConstructibleSet, std::size_t>> rank_partition(const RatFunMatrix& Q,
                                                                      const ConstructibleSet& cs) {
  const RingPtr& params = Q.ring();
  const std::size_t r = Q.size();
  if (is_empty(cs, params)) return {};
  MvPoly D(params, Rational(1));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) D = lcm(D, Q.at(i, j).den());
  std::vector<std::string> zs;
  for (std::size_t j = 0; j < r; ++j) zs.push_back("_z" + std::to_string(j + 1));
  RingPtr zr = Ring::make(zs, params->params(), MonomialOrder::grevlex, params->param_order());
  std::vector<MvPoly> forms;
  for (std::size_t i = 0; i < r; ++i) {
    MvPoly f(zr);
    for (std::size_t j = 0; j < r; ++j) {
      const RatFun& q = Q.at(i, j);
      if (q.is_zero()) continue;
      const MvPoly entry = map_to_ring(q.num() * divide_exact(D, q.den()), zr->param_ring());
      f += lift_param_poly(entry, MvPoly::variable(zr, j).leading_monomial(), zr);
    }
    if (!f.is_zero()) forms.push_back(f);
  }
  ConstructibleSet zcs;
  for (const auto& e : cs.E) zcs.E.push_back(map_to_ring(e, zr->param_ring()));
  for (const auto& n : cs.N) zcs.N.push_back(map_to_ring(n, zr->param_ring()));
  std::vector<std::pair<ConstructibleSet, std::size_t>> out;
  if (forms.empty()) {
    out.emplace_back(cs, 0);
    return out;
  }
  std::map<std::size_t, std::vector<ConstructibleSet>> by_rank;
  for (const auto& b : minimal_cgs(forms, zcs)) {
    ConstructibleSet back;
    for (const auto& e : b.cs.E) back.E.push_back(map_to_ring(e, params));
    for (const auto& n : b.cs.N) back.N.push_back(map_to_ring(n, params));
    by_rank[b.basis.size()].push_back(std::move(back));
  }
  // Splits along leading-coefficient factors are artifacts of the CGS;
  // pieces of equal rank are merged when their union is one set.
  for (auto it = by_rank.rbegin(); it != by_rank.rend(); ++it)
    for (auto& cs_k : merge_sets(std::move(it->second), params)) out.emplace_back(std::move(cs_k), it->first);
  return out;
}

std::size_t rank_of(std::vector<std::vector<Rational>> m) {
  std::size_t rank = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && sgn(m[pivot][c]) == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (sgn(m[i][c]) == 0) continue;
      const Rational f = m[i][c] / m[rank][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace prur
