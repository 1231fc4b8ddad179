#pragma once

#include <algorithm>
#include <cmath>

#include "tornheim/errors.hpp"
#include "tornheim/exact/bigreal.hpp"
#include "tornheim/exact/symbolic.hpp"
#include "tornheim/specfun/bernoulli.hpp"
#include "tornheim/specfun/context.hpp"

namespace tornheim::specfun {

struct HurwitzValue {
  BigReal value;
  BigReal derivative;  // d/ds; zero unless requested
};

/*
 * zeta(s,q) and d/ds zeta(s,q) by Euler-Maclaurin:
 *
 *   sum_{n<M} (n+q)^-s + x^{1-s}/(s-1) + x^-s/2
 *     + sum_j B_2j/(2j)! (s)_{2j-1} x^{1-s-2j},   x = M+q,
 *
 * differentiated term by term for the s-derivative. Valid for every real
 * s != 1 and q > 0.
 */
inline HurwitzValue hurwitz_em(const BigReal& s_in, const BigReal& q_in, const NumericContext& ctx, bool want_derivative) {
  if (s_in == 1L) throw DomainError("hurwitz_zeta: pole at s = 1");
  if (!(q_in > 0L)) throw DomainError("hurwitz_zeta: q must be positive");

  const double sd = s_in.to_double();
  const double neg = std::max(0.0, -sd);
  const double D = ctx.digits() + ctx.guard();
  const long M = static_cast<long>(std::ceil((D * std::log(10.0) + (neg + 1.0) * std::log(D + neg + 10.0)) / (2.0 * M_PI))) + 6;
  const long extra = (neg > 0 ? static_cast<long>(std::ceil((neg + 1.0) * std::log2(M + q_in.to_double() + 1.0))) : 0) + 16;
  const mpfr_prec_t wp = ctx.bits() + extra;

  const BigReal s(s_in, wp);
  const BigReal q(q_in, wp);
  BigReal v(wp), d(wp);
  for (long n = 0; n < M; ++n) {
    BigReal l = log(q + n);
    BigReal t = exp(-(s * l));
    v += t;
    if (want_derivative) d -= l * t;
  }

  const BigReal x = q + M;
  const BigReal lx = log(x);
  const BigReal xs = exp(-(s * lx));
  const BigReal sm1 = s - 1L;
  const BigReal head = x * xs / sm1;
  v += head;
  v += xs / 2L;
  if (want_derivative) {
    d -= lx * head;
    d -= head / sm1;
    d -= lx * xs / 2L;
  }

  const BigReal tol = BigReal(ctx.series_tol(), wp) * max(abs(v), BigReal(1L, wp)) / 1000L;
  const BigReal x2 = x * x;
  BigReal P = s;                 // (s)_{2j-1}
  BigReal dP(1L, wp);            // d/ds (s)_{2j-1}
  BigReal y = xs / x;            // x^{1-s-2j}
  int small_run = 0;
  BigReal last_mag(wp);
  const int jmax = static_cast<int>(4 * M + 40);
  for (int j = 1;; ++j) {
    if (j > jmax) throw ConvergenceError("hurwitz_zeta: Euler-Maclaurin correction did not settle");
    BigReal c(bernoulli_number(2 * j) / BigRational(factorial(2 * j)), wp);
    BigReal tv = c * P * y;
    BigReal td(wp);
    v += tv;
    if (want_derivative) {
      td = c * (dP - lx * P) * y;
      d += td;
    }
    BigReal mag = max(abs(tv), abs(td));
    if (mag < tol) {
      if (++small_run >= 2) break;
    } else {
      small_run = 0;
      if (j > 3 && mag > last_mag * 4L) throw ConvergenceError("hurwitz_zeta: asymptotic correction diverging");
    }
    last_mag = mag;
    // (s)_{2j+1} = (s)_{2j-1} (s+2j-1)(s+2j)
    BigReal f1 = s + static_cast<long>(2 * j - 1);
    BigReal f2 = s + static_cast<long>(2 * j);
    if (want_derivative) dP = dP * f1 * f2 + P * (f1 + f2);
    P = P * f1 * f2;
    y /= x2;
  }
  return {BigReal(v, ctx.bits()), BigReal(d, ctx.bits())};
}

inline BigReal hurwitz_zeta(const BigReal& s, const BigReal& q, const NumericContext& ctx) {
  return hurwitz_em(s, q, ctx, false).value;
}

inline BigReal hurwitz_zeta_sderiv(const BigReal& s, const BigReal& q, const NumericContext& ctx) {
  return hurwitz_em(s, q, ctx, true).derivative;
}

// zeta(1-k) = (-1)^{k+1} B_k / k, k >= 1.
inline BigRational zeta_one_minus(int k) {
  if (k < 1) throw DomainError("zeta_one_minus needs k >= 1");
  BigRational r = bernoulli_number(k) / k;
  return k % 2 == 0 ? BigRational(-r) : r;
}

inline BigReal riemann_zeta(long s, const NumericContext& ctx) {
  if (s == 1) throw DomainError("riemann_zeta: pole at s = 1");
  if (s <= 0) return ctx.real(zeta_one_minus(static_cast<int>(1 - s)));
  if (s % 2 == 0) return ctx.real(even_zeta_over_pi_power(static_cast<int>(s))) * pow(ctx.pi(), s);
  return hurwitz_zeta(ctx.real(s), ctx.real(1L), ctx);
}

inline BigReal riemann_zeta(const BigReal& s, const NumericContext& ctx) {
  if (s.is_integer() && abs(s) < BigReal(100000L, 32)) return riemann_zeta(s.to_long(), ctx);
  return hurwitz_zeta(s, ctx.real(1L), ctx);
}

// zeta'(-2k) = (-1)^k (2k)! zeta(2k+1) / (2 (2 pi)^{2k})
inline BigReal zeta_prime_neg_even(int k, const NumericContext& ctx) {
  if (k < 1) throw DomainError("zeta_prime_neg_even needs k >= 1");
  BigReal r = ctx.real(factorial(2 * k)) * riemann_zeta(2 * k + 1, ctx) / (pow(ctx.two_pi(), 2L * k) * 2L);
  return k % 2 == 0 ? r : -r;
}

inline BigReal log_gamma(const BigReal& q, const NumericContext& ctx) {
  if (!(q > 0L)) throw DomainError("log_gamma: argument must be positive");
  return lngamma(BigReal(q, ctx.bits()));
}

// (-1)^{floor(k/2)}
inline int four_parity(int k) {
  if (k < 0) throw DomainError("four_parity: negative integer");
  return (k / 2) % 2 == 0 ? 1 : -1;
}

// lambda(z) = Gamma(1-z) / (2 pi)^{1-z}
inline BigReal lambda_fn(const BigReal& z, const NumericContext& ctx) {
  if (z.is_integer() && z > 0L) throw DomainError("lambda_fn: pole at a positive integer");
  BigReal w = ctx.real(1L) - z;
  return gamma(w) / pow(ctx.two_pi(), w);
}

// B(a,b) = Gamma(a) Gamma(b) / Gamma(a+b)
inline BigReal euler_beta(const BigReal& a, const BigReal& b, const NumericContext& ctx) {
  BigReal x(a, ctx.bits()), y(b, ctx.bits());
  return gamma(x) * gamma(y) / gamma(x + y);
}

}  // namespace tornheim::specfun
