#include "prur/ring.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "prur/errors.hpp"

namespace prur {

std::string_view to_string(MonomialOrder order) {
  return order == MonomialOrder::grevlex ? "grevlex" : "lex";
}

MonomialOrder parse_monomial_order(std::string_view name) {
  if (name == "grevlex") return MonomialOrder::grevlex;
  if (name == "lex") return MonomialOrder::lex;
  throw DomainError("unknown monomial order '" + std::string(name) + "'");
}

Ring::Ring(std::vector<std::string> vars, std::vector<std::string> params, MonomialOrder var_order,
           MonomialOrder param_order)
    : vars_(std::move(vars)), params_(std::move(params)), var_order_(var_order), param_order_(param_order) {
  std::set<std::string> seen;
  for (const auto* block : {&vars_, &params_}) {
    for (const auto& name : *block) {
      if (name.empty()) throw ContextError("empty symbol name");
      if (!seen.insert(name).second) throw ContextError("duplicate symbol '" + name + "'");
    }
  }
  if (size() > std::numeric_limits<std::uint16_t>::max()) throw ContextError("too many symbols");
}

RingPtr Ring::make(std::vector<std::string> vars, std::vector<std::string> params, MonomialOrder var_order,
                   MonomialOrder param_order) {
  return std::make_shared<const Ring>(std::move(vars), std::move(params), var_order, param_order);
}

const std::string& Ring::symbol(std::size_t index) const {
  if (index < vars_.size()) return vars_[index];
  if (index < size()) return params_[index - vars_.size()];
  throw ContextError("symbol index out of range");
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return i;
  for (std::size_t i = 0; i < params_.size(); ++i)
    if (params_[i] == name) return vars_.size() + i;
  return std::nullopt;
}

namespace {

int compare_block(const Monomial& a, const Monomial& b, std::size_t begin, std::size_t end,
                  MonomialOrder order) noexcept {
  if (begin == end) return 0;
  if (order == MonomialOrder::grevlex) {
    unsigned da = 0;
    unsigned db = 0;
    for (std::size_t i = begin; i < end; ++i) {
      da += a[i];
      db += b[i];
    }
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = end; i-- > begin;) {
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
  }
  for (std::size_t i = begin; i < end; ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace

int Ring::compare_vars(const Monomial& a, const Monomial& b) const noexcept {
  return compare_block(a, b, 0, vars_.size(), var_order_);
}

int Ring::compare_params(const Monomial& a, const Monomial& b) const noexcept {
  return compare_block(a, b, vars_.size(), size(), param_order_);
}

int Ring::compare(const Monomial& a, const Monomial& b) const noexcept {
  const int c = compare_vars(a, b);
  return c != 0 ? c : compare_params(a, b);
}

bool Ring::same_var_part(const Monomial& a, const Monomial& b) const noexcept {
  return std::equal(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(vars_.size()), b.begin());
}

RingPtr Ring::param_ring() const {
  std::call_once(param_ring_once_, [this] {
    param_ring_ = std::make_shared<const Ring>(std::vector<std::string>{}, params_, MonomialOrder::grevlex,
                                               param_order_);
  });
  return param_ring_;
}

bool Ring::operator==(const Ring& other) const {
  return vars_ == other.vars_ && params_ == other.params_ && var_order_ == other.var_order_ &&
         param_order_ == other.param_order_;
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

namespace monomial {

Monomial multiply(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const unsigned e = unsigned(a[i]) + unsigned(b[i]);
    if (e > std::numeric_limits<Exponent>::max()) throw DomainError("exponent overflow");
    r[i] = static_cast<Exponent>(e);
  }
  return r;
}

bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Monomial divide(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = static_cast<Exponent>(a[i] - b[i]);
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::min(a[i], b[i]);
  return r;
}

bool is_one(const Monomial& m) {
  return std::all_of(m.begin(), m.end(), [](Exponent e) { return e == 0; });
}

unsigned total_degree(const Monomial& m) { return block_degree(m, 0, m.size()); }

unsigned block_degree(const Monomial& m, std::size_t begin, std::size_t end) {
  unsigned d = 0;
  for (std::size_t i = begin; i < end; ++i) d += m[i];
  return d;
}

bool coprime(const Monomial& a, const Monomial& b, std::size_t begin, std::size_t end) {
  for (std::size_t i = begin; i < end; ++i)
    if (a[i] != 0 && b[i] != 0) return false;
  return true;
}

}  // namespace monomial

}  // namespace prur
