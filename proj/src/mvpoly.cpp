#include "prur/mvpoly.hpp"

#include <algorithm>
#include <sstream>

#include "prur/budget.hpp"
#include "prur/errors.hpp"

namespace prur {

namespace {

void sort_and_merge(const Ring& ring, std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [&ring](const Term& a, const Term& b) { return ring.compare(a.mono, b.mono) > 0; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    Rational sum = terms[i].coeff;
    while (j < terms.size() && terms[j].mono == terms[i].mono) {
      sum += terms[j].coeff;
      ++j;
    }
    if (sgn(sum) != 0) {
      terms[out].mono = std::move(terms[i].mono);
      terms[out].coeff = std::move(sum);
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

}  // namespace

MvPoly::MvPoly(RingPtr ring) : ring_(std::move(ring)) {}

MvPoly::MvPoly(RingPtr ring, const Rational& constant) : ring_(std::move(ring)) {
  if (sgn(constant) != 0) terms_.push_back(Term{ring_->one(), constant});
}

MvPoly MvPoly::variable(RingPtr ring, std::size_t index, unsigned power) {
  if (index >= ring->size()) throw ContextError("variable index out of range");
  Monomial m = ring->one();
  m[index] = static_cast<Exponent>(power);
  return term(std::move(ring), std::move(m), Rational(1));
}

MvPoly MvPoly::term(RingPtr ring, Monomial mono, Rational coeff) {
  MvPoly p(std::move(ring));
  if (mono.size() != p.ring_->size()) throw ContextError("monomial length does not match ring");
  if (sgn(coeff) != 0) p.terms_.push_back(Term{std::move(mono), std::move(coeff)});
  return p;
}

MvPoly MvPoly::from_terms(RingPtr ring, std::vector<Term> terms) {
  MvPoly p(std::move(ring));
  for (const auto& t : terms)
    if (t.mono.size() != p.ring_->size()) throw ContextError("monomial length does not match ring");
  sort_and_merge(*p.ring_, terms);
  p.terms_ = std::move(terms);
  return p;
}

MvPoly MvPoly::from_sorted_terms(RingPtr ring, std::vector<Term> terms) {
  MvPoly p(std::move(ring));
  p.terms_ = std::move(terms);
  return p;
}

bool MvPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && monomial::is_one(terms_[0].mono));
}

bool MvPoly::is_one() const {
  return terms_.size() == 1 && monomial::is_one(terms_[0].mono) && terms_[0].coeff == 1;
}

Rational MvPoly::constant_value() const {
  if (!is_constant()) throw DomainError("polynomial is not constant");
  return terms_.empty() ? Rational(0) : terms_[0].coeff;
}

Rational MvPoly::constant_coefficient() const {
  if (!terms_.empty() && monomial::is_one(terms_.back().mono)) return terms_.back().coeff;
  return Rational(0);
}

const Term& MvPoly::leading_term() const {
  if (terms_.empty()) throw DomainError("leading term of the zero polynomial");
  return terms_.front();
}

bool MvPoly::involves(std::size_t index) const {
  return std::any_of(terms_.begin(), terms_.end(), [index](const Term& t) { return t.mono[index] != 0; });
}

bool MvPoly::has_vars() const {
  if (!ring_) return false;
  const std::size_t n = ring_->num_vars();
  return std::any_of(terms_.begin(), terms_.end(),
                     [n](const Term& t) { return monomial::block_degree(t.mono, 0, n) != 0; });
}

unsigned MvPoly::degree(std::size_t index) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max<unsigned>(d, t.mono[index]);
  return d;
}

unsigned MvPoly::total_degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, monomial::total_degree(t.mono));
  return d;
}

MvPoly MvPoly::operator-() const {
  MvPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

// Rough cost of one coefficient operation, in machine words.
static std::uint64_t limbs(const Rational& q) {
  return mpz_size(q.get_num_mpz_t()) + mpz_size(q.get_den_mpz_t());
}

void require_same_ring(const MvPoly& a, const MvPoly& b) {
  if (!same_ring(a.ring(), b.ring())) throw ContextError("polynomials belong to different rings");
}

MvPoly add_scaled(const MvPoly& a, const Rational& c, const Monomial& mono, const MvPoly& b) {
  require_same_ring(a, b);
  const Ring& ring = *a.ring();
  if (sgn(c) == 0 || b.is_zero()) return a;
  std::uint64_t work = kTermWork * (a.size() + b.size());
  for (const auto& t : b.terms()) work += limbs(t.coeff) * limbs(c);
  charge_work(work);
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  const bool unit_mono = monomial::is_one(mono);
  std::size_t i = 0;
  std::size_t j = 0;
  Monomial mb;
  auto shifted = [&](std::size_t k) -> const Monomial& {
    if (unit_mono) return tb[k].mono;
    mb = monomial::multiply(tb[k].mono, mono);
    return mb;
  };
  while (i < ta.size() || j < tb.size()) {
    if (j == tb.size()) {
      out.push_back(ta[i++]);
      continue;
    }
    const Monomial& m = shifted(j);
    if (i == ta.size()) {
      out.push_back(Term{m, c * tb[j].coeff});
      ++j;
      continue;
    }
    const int cmp = ring.compare(ta[i].mono, m);
    if (cmp > 0) {
      out.push_back(ta[i++]);
    } else if (cmp < 0) {
      out.push_back(Term{m, c * tb[j].coeff});
      ++j;
    } else {
      Rational s = ta[i].coeff + c * tb[j].coeff;
      if (sgn(s) != 0) out.push_back(Term{ta[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  return MvPoly::from_sorted_terms(a.ring(), std::move(out));
}

MvPoly& MvPoly::operator+=(const MvPoly& other) {
  if (!ring_) ring_ = other.ring_;
  *this = add_scaled(*this, Rational(1), ring_->one(), other);
  return *this;
}

MvPoly& MvPoly::operator-=(const MvPoly& other) {
  if (!ring_) ring_ = other.ring_;
  *this = add_scaled(*this, Rational(-1), ring_->one(), other);
  return *this;
}

MvPoly& MvPoly::operator*=(const MvPoly& other) {
  *this = *this * other;
  return *this;
}

MvPoly& MvPoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

MvPoly MvPoly::mul_term(const Monomial& mono, const Rational& coeff) const {
  MvPoly r(ring_);
  if (sgn(coeff) == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back(Term{monomial::multiply(t.mono, mono), t.coeff * coeff});
  return r;
}

namespace {

std::vector<Term> merge_rows(const Ring& ring, std::vector<Term>&& x, std::vector<Term>&& y) {
  std::vector<Term> out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() && j < y.size()) {
    const int cmp = ring.compare(x[i].mono, y[j].mono);
    if (cmp > 0) {
      out.push_back(std::move(x[i++]));
    } else if (cmp < 0) {
      out.push_back(std::move(y[j++]));
    } else {
      x[i].coeff += y[j].coeff;
      if (sgn(x[i].coeff) != 0) out.push_back(std::move(x[i]));
      ++i;
      ++j;
    }
  }
  for (; i < x.size(); ++i) out.push_back(std::move(x[i]));
  for (; j < y.size(); ++j) out.push_back(std::move(y[j]));
  return out;
}

}  // namespace

MvPoly operator*(const MvPoly& a, const MvPoly& b) {
  require_same_ring(a, b);
  if (a.is_zero() || b.is_zero()) return MvPoly(a.ring());
  if (a.size() == 1) return b.mul_term(a.terms()[0].mono, a.terms()[0].coeff);
  if (b.size() == 1) return a.mul_term(b.terms()[0].mono, b.terms()[0].coeff);
  std::uint64_t la = 0, lb = 0;
  for (const auto& t : a.terms()) la += limbs(t.coeff);
  for (const auto& t : b.terms()) lb += limbs(t.coeff);
  charge_work(la * lb + kTermWork * a.size() * b.size());
  // Each row (one term of the shorter factor times the longer one) is already
  // sorted, since term orders are compatible with multiplication.
  const MvPoly& shorter = a.size() <= b.size() ? a : b;
  const MvPoly& longer = a.size() <= b.size() ? b : a;
  // Binary-counter merging keeps at most one pending row per size class.
  const Ring& ring = *longer.ring();
  std::vector<std::pair<unsigned, std::vector<Term>>> stack;
  for (const auto& ts : shorter.terms()) {
    std::vector<Term> row;
    row.reserve(longer.size());
    for (const auto& tl : longer.terms()) row.push_back(Term{monomial::multiply(tl.mono, ts.mono), tl.coeff * ts.coeff});
    stack.emplace_back(0U, std::move(row));
    while (stack.size() >= 2 && stack[stack.size() - 2].first == stack.back().first) {
      auto top = std::move(stack.back());
      stack.pop_back();
      stack.back().second = merge_rows(ring, std::move(stack.back().second), std::move(top.second));
      ++stack.back().first;
    }
  }
  while (stack.size() >= 2) {
    auto top = std::move(stack.back());
    stack.pop_back();
    stack.back().second = merge_rows(ring, std::move(stack.back().second), std::move(top.second));
  }
  return MvPoly::from_sorted_terms(a.ring(), std::move(stack.back().second));
}

MvPoly operator+(MvPoly a, const MvPoly& b) { return a += b; }
MvPoly operator-(MvPoly a, const MvPoly& b) { return a -= b; }
MvPoly operator*(MvPoly a, const Rational& c) { return a *= c; }
MvPoly operator*(const Rational& c, MvPoly a) { return a *= c; }

MvPoly MvPoly::pow(unsigned exponent) const {
  MvPoly result(ring_, Rational(1));
  MvPoly base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent != 0) base = base * base;
  }
  return result;
}

MvPoly MvPoly::derivative(std::size_t index) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.mono[index] == 0) continue;
    Term d{t.mono, t.coeff * t.mono[index]};
    d.mono[index] -= 1;
    out.push_back(std::move(d));
  }
  // Lowering one exponent keeps the relative order of distinct terms only for
  // lex; re-sort in general.
  return from_terms(ring_, std::move(out));
}

bool MvPoly::operator==(const MvPoly& other) const {
  if (terms_.size() != other.terms_.size()) return false;
  if (terms_.empty()) return true;
  if (!same_ring(ring_, other.ring_)) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].mono != other.terms_[i].mono || terms_[i].coeff != other.terms_[i].coeff) return false;
  }
  return true;
}

std::string rational_to_string(const Rational& q) {
  return q.get_den() == 1 ? q.get_num().get_str() : q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string MvPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    if (first) {
      if (sgn(c) < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
      if (sgn(c) < 0) c = -c;
    }
    first = false;
    const bool unit = monomial::is_one(t.mono);
    if (unit) {
      os << rational_to_string(c);
      continue;
    }
    bool need_star = false;
    if (c != 1) {
      os << rational_to_string(c);
      need_star = true;
    }
    // Parameters print before variables: u1*x1^2.
    const std::size_t nv = ring_->num_vars();
    for (std::size_t k = 0; k < t.mono.size(); ++k) {
      const std::size_t i = k < ring_->num_params() ? nv + k : k - ring_->num_params();
      if (t.mono[i] == 0) continue;
      if (need_star) os << "*";
      os << ring_->symbol(i);
      if (t.mono[i] > 1) os << "^" << t.mono[i];
      need_star = true;
    }
  }
  return os.str();
}

Rational rational_content(const MvPoly& p) {
  if (p.is_zero()) return Rational(0);
  Integer num_gcd = 0;
  Integer den_lcm = 1;
  for (const auto& t : p.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
  }
  Rational c(num_gcd, den_lcm);
  c.canonicalize();
  if (sgn(p.leading_coefficient()) < 0) c = -c;
  return c;
}

MvPoly primitive_integer_part(const MvPoly& p) {
  if (p.is_zero()) return p;
  const Rational c = rational_content(p);
  if (c == 1) return p;
  return p * Rational(1 / c);
}

MvPoly monic(const MvPoly& p) {
  if (p.is_zero()) return p;
  const Rational lc = p.leading_coefficient();
  if (lc == 1) return p;
  return p * Rational(1 / lc);
}

std::optional<MvPoly> try_divide_exact(const MvPoly& a, const MvPoly& b) {
  require_same_ring(a, b);
  if (b.is_zero()) throw DomainError("division by the zero polynomial");
  MvPoly q(a.ring());
  if (a.is_zero()) return q;
  if (b.is_constant()) return a * Rational(1 / b.constant_value());
  const Term& lb = b.leading_term();
  std::vector<Term> quotient;
  MvPoly r = a;
  while (!r.is_zero()) {
    const Term& lr = r.leading_term();
    if (!monomial::divides(lb.mono, lr.mono)) return std::nullopt;
    Term qt{monomial::divide(lr.mono, lb.mono), lr.coeff / lb.coeff};
    r = add_scaled(r, -qt.coeff, qt.mono, b);
    quotient.push_back(std::move(qt));
  }
  // Quotient terms come out in decreasing order.
  return MvPoly::from_sorted_terms(a.ring(), std::move(quotient));
}

MvPoly divide_exact(const MvPoly& a, const MvPoly& b) {
  auto q = try_divide_exact(a, b);
  if (!q) throw InternalError("inexact polynomial division: (" + a.to_string() + ") / (" + b.to_string() + ")");
  return std::move(*q);
}

MvPoly substitute(const MvPoly& p, std::span<const std::optional<Rational>> values) {
  if (values.size() != p.ring()->size()) throw ContextError("substitution size mismatch");
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    Term r{t.mono, t.coeff};
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (!values[i] || t.mono[i] == 0) continue;
      Rational pw;
      mpz_pow_ui(pw.get_num_mpz_t(), values[i]->get_num_mpz_t(), t.mono[i]);
      mpz_pow_ui(pw.get_den_mpz_t(), values[i]->get_den_mpz_t(), t.mono[i]);
      r.coeff *= pw;
      r.mono[i] = 0;
    }
    if (sgn(r.coeff) != 0) out.push_back(std::move(r));
  }
  return MvPoly::from_terms(p.ring(), std::move(out));
}

Rational evaluate(const MvPoly& p, std::span<const Rational> values) {
  if (values.size() != p.ring()->size()) throw ContextError("evaluation size mismatch");
  Rational sum = 0;
  for (const auto& t : p.terms()) {
    Rational v = t.coeff;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (t.mono[i] == 0) continue;
      Rational pw;
      mpz_pow_ui(pw.get_num_mpz_t(), values[i].get_num_mpz_t(), t.mono[i]);
      mpz_pow_ui(pw.get_den_mpz_t(), values[i].get_den_mpz_t(), t.mono[i]);
      v *= pw;
    }
    sum += v;
  }
  return sum;
}

MvPoly map_to_ring(const MvPoly& p, const RingPtr& target) {
  if (same_ring(p.ring(), target)) {
    return MvPoly::from_sorted_terms(target, std::vector<Term>(p.terms()));
  }
  const Ring& src = *p.ring();
  std::vector<std::optional<std::size_t>> map(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) map[i] = target->index_of(src.symbol(i));
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    Monomial m = target->one();
    for (std::size_t i = 0; i < src.size(); ++i) {
      if (t.mono[i] == 0) continue;
      if (!map[i]) throw ContextError("symbol '" + src.symbol(i) + "' does not exist in the target ring");
      m[*map[i]] = t.mono[i];
    }
    out.push_back(Term{std::move(m), t.coeff});
  }
  return MvPoly::from_terms(target, std::move(out));
}

std::vector<VarBlock> var_blocks(const MvPoly& p) {
  const Ring& ring = *p.ring();
  const std::size_t n = ring.num_vars();
  const RingPtr pr = ring.param_ring();
  std::vector<VarBlock> blocks;
  const auto& terms = p.terms();
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i;
    std::vector<Term> coeff_terms;
    while (j < terms.size() && ring.same_var_part(terms[i].mono, terms[j].mono)) {
      Monomial m(terms[j].mono.begin() + static_cast<std::ptrdiff_t>(n), terms[j].mono.end());
      coeff_terms.push_back(Term{std::move(m), terms[j].coeff});
      ++j;
    }
    Monomial vp = terms[i].mono;
    std::fill(vp.begin() + static_cast<std::ptrdiff_t>(n), vp.end(), Exponent{0});
    blocks.push_back(VarBlock{std::move(vp), MvPoly::from_sorted_terms(pr, std::move(coeff_terms))});
    i = j;
  }
  return blocks;
}

VarBlock leading_var_block(const MvPoly& p, std::size_t from) {
  const Ring& ring = *p.ring();
  const std::size_t n = ring.num_vars();
  const auto& terms = p.terms();
  if (from >= terms.size()) throw DomainError("leading block of the zero polynomial");
  std::vector<Term> coeff_terms;
  for (std::size_t j = from; j < terms.size() && ring.same_var_part(terms[from].mono, terms[j].mono); ++j) {
    Monomial m(terms[j].mono.begin() + static_cast<std::ptrdiff_t>(n), terms[j].mono.end());
    coeff_terms.push_back(Term{std::move(m), terms[j].coeff});
  }
  Monomial vp = terms[from].mono;
  std::fill(vp.begin() + static_cast<std::ptrdiff_t>(n), vp.end(), Exponent{0});
  return VarBlock{std::move(vp), MvPoly::from_sorted_terms(ring.param_ring(), std::move(coeff_terms))};
}

MvPoly lift_param_poly(const MvPoly& coeff, const Monomial& var_part, const RingPtr& full) {
  const std::size_t n = full->num_vars();
  if (coeff.ring()->num_vars() != 0 || coeff.ring()->num_params() != full->num_params())
    throw ContextError("coefficient is not a parameter polynomial of the target ring");
  std::vector<Term> out;
  out.reserve(coeff.size());
  for (const auto& t : coeff.terms()) {
    Monomial m = var_part;
    for (std::size_t i = 0; i < t.mono.size(); ++i) m[n + i] = static_cast<Exponent>(m[n + i] + t.mono[i]);
    out.push_back(Term{std::move(m), t.coeff});
  }
  // Fixed X-part and a param-ordered coefficient keep the block order.
  return MvPoly::from_sorted_terms(full, std::move(out));
}

MvPoly from_var_blocks(const std::vector<VarBlock>& blocks, const RingPtr& full) {
  std::vector<Term> out;
  for (const auto& b : blocks) {
    MvPoly lifted = lift_param_poly(b.coeff, b.var_part, full);
    for (const auto& t : lifted.terms()) out.push_back(t);
  }
  return MvPoly::from_terms(full, std::move(out));
}

}  // namespace prur
