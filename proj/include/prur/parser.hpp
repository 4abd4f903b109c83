#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "prur/mvpoly.hpp"

namespace prur {

struct ParsedSystem {
  RingPtr ring;
  std::vector<MvPoly> polys;
};

/// Parses
///   parameters: u1, u2;      (optional)
///   variables: x1, x2;
///   system: u1*x1^2 + u2*x2 + u2, u2*x2^2 + u1*x2 + u1;
/// '#' starts a comment. Expressions use + - * ^ and parentheses with integer
/// literals; '/' is allowed when the divisor is a nonzero constant. Throws
/// ParseError carrying line and column.
ParsedSystem parse_system(std::string_view text, MonomialOrder var_order = MonomialOrder::grevlex,
                          MonomialOrder param_order = MonomialOrder::grevlex);

/// A single expression over the symbols of `ring`.
MvPoly parse_polynomial(std::string_view text, const RingPtr& ring);

}  // namespace prur
