#pragma once

#include <boost/container/small_vector.hpp>

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace prur {

enum class MonomialOrder { grevlex, lex };

std::string_view to_string(MonomialOrder order);
MonomialOrder parse_monomial_order(std::string_view name);

using Exponent = std::uint16_t;

/// Dense exponent vector; layout is [variables..., parameters...].
using Monomial = boost::container::small_vector<Exponent, 12>;

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// Polynomial ring k[U, X] with the block order X >> U. The variable block X
/// and the parameter block U each carry their own order. A ring with an empty
/// variable block is the parameter ring k[U].
class Ring {
 public:
  Ring(std::vector<std::string> vars, std::vector<std::string> params,
       MonomialOrder var_order = MonomialOrder::grevlex,
       MonomialOrder param_order = MonomialOrder::grevlex);

  static RingPtr make(std::vector<std::string> vars, std::vector<std::string> params,
                      MonomialOrder var_order = MonomialOrder::grevlex,
                      MonomialOrder param_order = MonomialOrder::grevlex);

  std::size_t num_vars() const noexcept { return vars_.size(); }
  std::size_t num_params() const noexcept { return params_.size(); }
  std::size_t size() const noexcept { return vars_.size() + params_.size(); }

  const std::vector<std::string>& vars() const noexcept { return vars_; }
  const std::vector<std::string>& params() const noexcept { return params_; }
  MonomialOrder var_order() const noexcept { return var_order_; }
  MonomialOrder param_order() const noexcept { return param_order_; }

  const std::string& symbol(std::size_t index) const;
  std::optional<std::size_t> index_of(std::string_view name) const;

  /// Three-way comparison in the block order: negative, zero or positive.
  int compare(const Monomial& a, const Monomial& b) const noexcept;
  int compare_vars(const Monomial& a, const Monomial& b) const noexcept;
  int compare_params(const Monomial& a, const Monomial& b) const noexcept;
  bool same_var_part(const Monomial& a, const Monomial& b) const noexcept;

  Monomial one() const { return Monomial(size(), 0); }

  /// k[U] with the same parameter block and order.
  RingPtr param_ring() const;

  bool operator==(const Ring& other) const;
  bool operator!=(const Ring& other) const { return !(*this == other); }

 private:
  std::vector<std::string> vars_;
  std::vector<std::string> params_;
  MonomialOrder var_order_;
  MonomialOrder param_order_;
  mutable std::once_flag param_ring_once_;
  mutable RingPtr param_ring_;
};

bool same_ring(const RingPtr& a, const RingPtr& b);

namespace monomial {

Monomial multiply(const Monomial& a, const Monomial& b);
bool divides(const Monomial& a, const Monomial& b);
/// a / b, requires divides(b, a).
Monomial divide(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
bool is_one(const Monomial& m);
unsigned total_degree(const Monomial& m);
/// Sum of exponents in [begin, end).
unsigned block_degree(const Monomial& m, std::size_t begin, std::size_t end);
/// True when a and b share no variable in [begin, end).
bool coprime(const Monomial& a, const Monomial& b, std::size_t begin, std::size_t end);

}  // namespace monomial

}  // namespace prur
