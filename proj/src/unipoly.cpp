#include "prur/unipoly.hpp"

namespace prur {

int distinct_root_count(const QPoly& p) {
  if (p.is_zero()) throw DomainError("root count of the zero polynomial");
  if (p.degree() == 0) return 0;
  const QPoly g = euclid_gcd(p, p.derivative());
  return p.degree() - g.degree();
}

}  // namespace prur
