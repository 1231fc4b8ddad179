#pragma once

#include <map>
#include <utility>

#include "tornheim/errors.hpp"
#include "tornheim/exact/bigreal.hpp"
#include "tornheim/exact/symbolic.hpp"
#include "tornheim/identities.hpp"
#include "tornheim/integrals/integrals.hpp"
#include "tornheim/oracle/direct_sum.hpp"
#include "tornheim/reduction.hpp"
#include "tornheim/specfun/context.hpp"
#include "tornheim/specfun/zeta.hpp"

namespace tornheim {

/*
 * Numeric values of symbolic atoms at one precision. Zeta values and Y*
 * integrals are cached; basis sums T(a,0,b) must be expanded first.
 */
class ComboEvaluator {
 public:
  explicit ComboEvaluator(const NumericContext& ctx) : ctx_(ctx) {}

  const NumericContext& context() const { return ctx_; }

  BigReal value(const ZetaSymbol& s) {
    switch (s.kind) {
      case SymbolKind::One: return ctx_.real(1L);
      case SymbolKind::Zeta: return zeta(s.a);
      case SymbolKind::ZetaProd: return zeta(s.a) * zeta(s.b);
      case SymbolKind::ZetaLog: return zeta(s.a) * ctx_.log_two_pi();
      case SymbolKind::YStar: {
        auto key = std::make_pair(s.a, s.b);
        auto it = ystar_.find(key);
        if (it == ystar_.end()) it = ystar_.emplace(key, integrals::Y_star(s.a, s.b, ctx_)).first;
        return it->second;
      }
      case SymbolKind::TBasis: throw Error("cannot evaluate " + s.to_string() + " without expanding it");
    }
    throw Error("unknown symbol kind");
  }

  BigReal evaluate(const SymbolicCombo& c) {
    BigReal s(ctx_.bits());
    for (const auto& [sym, coeff] : c.terms()) s += ctx_.real(coeff) * value(sym);
    return s;
  }

 private:
  BigReal zeta(int n) {
    auto it = zeta_.find(n);
    if (it == zeta_.end()) it = zeta_.emplace(n, specfun::riemann_zeta(n, ctx_)).first;
    return it->second;
  }

  NumericContext ctx_;
  std::map<int, BigReal> zeta_;
  std::map<std::pair<int, int>, BigReal> ystar_;
};

struct VerifyReport {
  TornheimIndex index;
  SymbolicCombo symbolic;   // over the generating set
  SymbolicCombo expanded;   // basis sums replaced by Y*
  BigReal numeric_from_symbolic;
  BigReal numeric_from_oracle;
  BigReal abs_diff;
  BigReal tolerance;
  bool pass = false;
};

// Numeric value of T(m,k,n) through the reduction and the Y* integrals.
inline BigReal evaluate_reduction(const ReductionResult& r, ComboEvaluator& ev) { return ev.evaluate(expand_basis(r.combo)); }

inline VerifyReport verify(int m, int k, int n, ComboEvaluator& ev, const BigReal& tol) {
  const NumericContext& ctx = ev.context();
  ReductionResult r = reduce(m, k, n);
  VerifyReport rep;
  rep.index = r.index;
  rep.symbolic = r.combo;
  rep.expanded = expand_basis(r.combo);
  rep.numeric_from_symbolic = ev.evaluate(rep.expanded);
  rep.numeric_from_oracle = oracle::tornheim_direct(m, k, n, ctx);
  rep.abs_diff = abs(rep.numeric_from_symbolic - rep.numeric_from_oracle);
  rep.tolerance = BigReal(tol, ctx.bits());
  rep.pass = rep.abs_diff <= rep.tolerance;
  return rep;
}

inline VerifyReport verify(int m, int k, int n, const NumericContext& ctx, const BigReal& tol) {
  ComboEvaluator ev(ctx);
  return verify(m, k, n, ev, tol);
}

}  // namespace tornheim
