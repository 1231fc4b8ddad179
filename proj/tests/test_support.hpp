#pragma once

#include <initializer_list>
#include <string>
#include <utility>

#include "tornheim/tornheim.hpp"

namespace tornheim::testing {

// {"zeta(8)", "2/3"}, {"T(6,0,2)", "-1"}, ...
using TermList = std::initializer_list<std::pair<const char*, const char*>>;

inline SymbolicCombo combo(TermList terms) {
  SymbolicCombo c;
  for (const auto& [sym, coeff] : terms) c.add(ZetaSymbol::parse(sym), parse_rational(coeff));
  return c;
}

inline double abs_diff(const BigReal& a, const BigReal& b) { return abs(a - b).to_double(); }

inline BigReal tol(int exponent, const NumericContext& ctx) { return pow10(exponent, ctx.bits()); }

}  // namespace tornheim::testing
