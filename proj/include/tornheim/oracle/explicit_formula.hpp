#pragma once

#include "tornheim/errors.hpp"
#include "tornheim/exact/bigreal.hpp"
#include "tornheim/integrals/quadrature.hpp"
#include "tornheim/specfun/context.hpp"
#include "tornheim/specfun/zeta.hpp"

namespace tornheim::oracle {

/*
 * T(a,0,c) for real a, c > 2 off the integers:
 *
 *   4 lambda(a) lambda(c) sin(pi c/2) [ sin(pi a/2) { zeta(1-a) zeta(1-c)
 *       - zeta(1-a-c) B(a,c) / (1 - tan(pi a/2) tan(pi c/2)) }
 *     - 1/2 cos(pi a/2) int_0^1 [zeta(1-a,q) - zeta(1-a,1-q)] zeta(1-c,q) cot(pi q) dq ].
 *
 * zeta(1-z) is taken from the functional equation 2 (2pi)^{-z} cos(pi z/2) Gamma(z) zeta(z),
 * which keeps full relative accuracy near the trivial zeros and cancels
 * cos(pi(a+c)/2) in 1 - tan(pi a/2) tan(pi c/2) = cos(pi(a+c)/2) / (cos(pi a/2) cos(pi c/2)).
 */
inline BigReal t_a0c_formula(const BigReal& a_in, const BigReal& c_in, const NumericContext& ctx) {
  if (a_in.is_integer() || c_in.is_integer()) throw DomainError("t_a0c_formula: a and c must not be integers");
  if (!(a_in > 2L) || !(c_in > 2L)) throw DomainError("t_a0c_formula: a and c must exceed 2");
  using namespace specfun;
  const BigReal a(a_in, ctx.bits()), c(c_in, ctx.bits());
  const BigReal sa = ctx.real(1L) - a, sc = ctx.real(1L) - c;
  const BigReal ha = ctx.pi() * a / 2L, hc = ctx.pi() * c / 2L;

  // zeta(1-z) / cos(pi z/2)
  auto reflected = [&](const BigReal& z) { return 2L * gamma(z) * riemann_zeta(z, ctx) / pow(ctx.two_pi(), z); };
  const BigReal ac = a + c;
  BigReal braces = reflected(a) * cos(ha) * reflected(c) * cos(hc) -
                   reflected(ac) * euler_beta(a, c, ctx) * cos(ha) * cos(hc);

  auto f = [&](const BigReal& q, const BigReal& qc) {
    BigReal bracket = hurwitz_zeta(sa, q, ctx) - hurwitz_zeta(sa, qc, ctx);
    const bool upper = qc < q;
    BigReal x = ctx.pi() * (upper ? qc : q);
    BigReal cot_v = cos(x) / sin(x);
    if (upper) cot_v = -cot_v;
    return bracket * hurwitz_zeta(sc, q, ctx) * cot_v;
  };
  BigReal integral = quad::integrate01(f, ctx, {true, true}, "cotangent integral");

  BigReal inner = sin(ha) * braces - cos(ha) * integral / 2L;
  return 4L * lambda_fn(a, ctx) * lambda_fn(c, ctx) * sin(hc) * inner;
}

}  // namespace tornheim::oracle
