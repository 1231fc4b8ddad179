#pragma once

#include <cmath>
#include <cstdlib>
#include <functional>
#include <string>

#include "tornheim/errors.hpp"
#include "tornheim/exact/bigreal.hpp"
#include "tornheim/specfun/context.hpp"

namespace tornheim::quad {

struct QuadratureResult {
  BigReal value;
  BigReal error_estimate;
  long evaluations = 0;
  int levels = 0;
  bool converged = false;
};

struct SingularEnds {
  bool left = false;
  bool right = false;
};

// Integrand evaluations made by quad01 on this thread.
inline thread_local long evaluation_count = 0;

// f(q, 1-q); both arguments are exact to working precision.
using Integrand = std::function<BigReal(const BigReal& q, const BigReal& qc)>;

// ceil(log2(digits)) + 4, or TORNHEIM_MAX_QUAD_LEVEL when set.
inline int max_level(const NumericContext& ctx) {
  if (const char* env = std::getenv("TORNHEIM_MAX_QUAD_LEVEL")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v >= 1 && v <= 30) return static_cast<int>(v);
  }
  return static_cast<int>(std::ceil(std::log2(static_cast<double>(ctx.digits())))) + 4;
}

/*
 * Tanh-sinh rule on [0,1]:
 *
 *   q(t) = 1/(1 + exp(-2u)),  u = (pi/2) sinh t,
 *   dq/dt = pi cosh t e / (1+e)^2,  e = exp(-2|u|).
 *
 * The step is halved until two successive estimates agree to
 * ctx.series_tol() relative to max(1, |I|). Logarithmic endpoint
 * singularities (flagged in ends) widen the truncation range.
 */
inline QuadratureResult quad01(const Integrand& f, const NumericContext& ctx, SingularEnds ends = {}) {
  const mpfr_prec_t bits = ctx.bits();
  const BigReal half_pi = ctx.pi() / 2L;
  const double log10_eps = -(ctx.digits() + ctx.guard() / 2) - 5.0;
  const bool singular = ends.left || ends.right;
  double t_max = 0.5;
  for (;; t_max += 0.125) {
    double u = 0.5 * M_PI * std::sinh(t_max);
    double lw = std::log10(M_PI * std::cosh(t_max)) - 2.0 * u / std::log(10.0);
    if (singular) lw += std::log10(1.0 + 4.0 * u * u) * 1.5;
    if (lw < log10_eps || t_max > 12.0) break;
  }

  QuadratureResult res{BigReal(bits), BigReal(bits), 0, 0, false};
  // Sum of w f over the nodes t = j h for the listed j.
  auto node_pair = [&](const BigReal& t, bool include_mirror) {
    BigReal u = half_pi * sinh(t);
    BigReal e = exp(-(u * 2L));
    BigReal one_plus = e + 1L;
    BigReal small = e / one_plus;
    BigReal large = 1L / one_plus;
    BigReal w = ctx.pi() * cosh(t) * e / (one_plus * one_plus);
    BigReal s = f(large, small);  // t > 0: q near 1
    res.evaluations += 1;
    if (include_mirror) {
      s += f(small, large);
      res.evaluations += 1;
    }
    evaluation_count += include_mirror ? 2 : 1;
    return w * s;
  };

  const int levels = max_level(ctx);
  BigReal h(1L, bits);
  BigReal sum = node_pair(BigReal(bits), false);
  const long n0 = static_cast<long>(std::ceil(t_max));
  for (long j = 1; j <= n0; ++j) sum += node_pair(BigReal(j, bits), true);
  BigReal estimate = sum;
  BigReal tol = ctx.series_tol();
  for (int level = 1; level <= levels; ++level) {
    h /= 2L;
    const long count = static_cast<long>(std::ceil(t_max * std::ldexp(1.0, level)));
    BigReal fresh(bits);
    for (long j = 1; j <= count; j += 2) fresh += node_pair(h * j, true);
    sum += fresh;
    BigReal next = sum * h;
    BigReal diff = abs(next - estimate);
    estimate = next;
    res.levels = level;
    res.error_estimate = diff;
    if (level >= 3 && diff <= tol * max(abs(next), BigReal(1L, bits))) {
      res.converged = true;
      break;
    }
  }
  res.value = estimate;
  return res;
}

// Value of quad01, throwing ConvergenceError when the level cap is reached.
inline BigReal integrate01(const Integrand& f, const NumericContext& ctx, SingularEnds ends, const std::string& what) {
  QuadratureResult r = quad01(f, ctx, ends);
  if (!r.converged) {
    throw ConvergenceError(what + ": quadrature did not converge after " + std::to_string(r.levels) +
                           " levels (estimate " + r.value.to_string(20) + ", error " + r.error_estimate.to_string(3) + ")");
  }
  return r.value;
}

}  // namespace tornheim::quad
