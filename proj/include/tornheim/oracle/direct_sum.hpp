#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "tornheim/errors.hpp"
#include "tornheim/exact/bigreal.hpp"
#include "tornheim/exact/rational.hpp"
#include "tornheim/specfun/context.hpp"

namespace tornheim::oracle {

struct RealTriple {
  BigReal a, b, c;
};

inline bool converges(double a, double b, double c) { return a + c > 1 && b + c > 1 && a + b + c > 2; }

namespace detail {

// Riemann zeta straight from MPFR, so the oracle shares no code with specfun.
inline BigReal mpfr_zeta_at(const BigReal& s) {
  BigReal r(s.precision());
  mpfr_zeta(r.get(), s.get(), MPFR_RNDN);
  return r;
}

inline double distance_to_integer(double s) { return std::abs(s - std::round(s)); }

}  // namespace detail

/*
 * Li_s(e^{-t}) for real s and t > 0.
 *
 * For t < 2 the expansion about t = 0 is used:
 *   s not an integer:  Gamma(1-s) t^{s-1} + sum_k zeta(s-k) (-t)^k / k!
 *   s = n >= 2:        sum_{k != n-1} zeta(n-k) (-t)^k / k! + (-t)^{n-1}/(n-1)! (H_{n-1} - log t)
 * and otherwise the defining series sum_k e^{-kt} k^{-s}. s = 0 and s = 1 are closed forms.
 */
class PolylogExp {
 public:
  PolylogExp(const BigReal& s, mpfr_prec_t bits) {
    const double sd = s.to_double();
    is_integer_ = s.is_integer();
    if (is_integer_) {
      n_ = s.to_long();
      if (n_ < 0) throw DomainError("direct sum: negative integer exponents are not supported");
    }
    long extra = 16;
    if (!is_integer_) {
      double dist = std::max(detail::distance_to_integer(sd), 1e-30);
      extra += static_cast<long>(2.0 * std::ceil(-std::log2(dist)));
    }
    bits_ = bits + extra;
    out_bits_ = bits;
    s_ = BigReal(s, bits_);
    eps_ = ldexp(BigReal(1L, bits_), -static_cast<long>(bits_));
    if (is_integer_ && n_ <= 1) return;

    const long terms = static_cast<long>(std::ceil(bits_ * std::log(2.0) / std::log(M_PI))) + 12;
    BigReal fact(1L, bits_);
    for (long k = 0; k <= terms; ++k) {
      if (k > 0) fact *= k;
      if (is_integer_ && k == n_ - 1) {
        coeff_.emplace_back(bits_);
        continue;
      }
      BigReal z = detail::mpfr_zeta_at(s_ - k);
      coeff_.push_back(k % 2 == 0 ? z / fact : -(z / fact));
    }
    if (is_integer_) {
      BigRational h = 0;
      for (long i = 1; i < n_; ++i) h += make_rational(1, i);
      harmonic_ = BigReal(h, bits_);
      BigReal f(factorial(n_ - 1), bits_);
      log_coeff_ = (n_ - 1) % 2 == 0 ? 1L / f : -(1L / f);
    } else {
      gamma_ = gamma(BigReal(1L, bits_) - s_);
    }
  }

  // Li_s(e^{-t}) with log t supplied alongside t.
  BigReal operator()(const BigReal& t_in, const BigReal& log_t_in) const {
    BigReal t(t_in, bits_), log_t(log_t_in, bits_);
    if (is_integer_ && n_ == 0) return BigReal(1L / expm1(t), out_bits_);
    if (is_integer_ && n_ == 1) return BigReal(-log(-expm1(-t)), out_bits_);
    if (t < 2L) return BigReal(small_t(t, log_t), out_bits_);
    return BigReal(series(t), out_bits_);
  }

 private:
  BigReal small_t(const BigReal& t, const BigReal& log_t) const {
    BigReal p(bits_);
    for (auto it = coeff_.rbegin(); it != coeff_.rend(); ++it) {
      p *= t;
      p += *it;
    }
    if (is_integer_) {
      p += log_coeff_ * pow(t, n_ - 1) * (harmonic_ - log_t);
    } else {
      p += gamma_ * exp((s_ - 1L) * log_t);
    }
    return p;
  }

  BigReal series(const BigReal& t) const {
    const BigReal q = exp(-t);
    BigReal qk = q, sum(bits_);
    for (long k = 1;; ++k) {
      BigReal term = qk * exp(-(s_ * log(BigReal(k, bits_))));
      sum += term;
      if (k > 2 && abs(term) < eps_ * abs(sum)) break;
      if (k > 100000) throw ConvergenceError("direct sum: polylog series did not settle");
      qk *= q;
    }
    return sum;
  }

  bool is_integer_ = false;
  long n_ = 0;
  mpfr_prec_t bits_ = 0, out_bits_ = 0;
  BigReal s_, eps_, harmonic_, log_coeff_, gamma_;
  std::vector<BigReal> coeff_;  // zeta(s-k)(-1)^k/k!, zero at k = n-1 for integer s
};

struct DirectResult {
  BigReal value;
  BigReal error_estimate;
  long evaluations = 0;
  int levels = 0;
};

/*
 * T(a,b,c) = sum_{r,s>=1} r^-a s^-b (r+s)^-c through
 *
 *   T(a,b,c) = 1/Gamma(c) int_0^inf t^{c-1} Li_a(e^{-t}) Li_b(e^{-t}) dt,
 *
 * integrated by the exp-sinh rule t = exp((pi/2) sinh x) with step halving.
 * c = 0 gives zeta(a) zeta(b).
 */
inline DirectResult tornheim_direct_detailed(const BigReal& a, const BigReal& b, const BigReal& c, const NumericContext& ctx) {
  const double ad = a.to_double(), bd = b.to_double(), cd = c.to_double();
  if (!converges(ad, bd, cd)) throw DomainError("direct sum: parameters outside a+c>1, b+c>1, a+b+c>2");
  if (cd < 0) throw DomainError("direct sum: c must be non-negative");
  const mpfr_prec_t bits = ctx.bits() + 16;
  DirectResult res{BigReal(ctx.bits()), BigReal(ctx.bits()), 0, 0};
  if (c.is_zero()) {
    res.value = BigReal(detail::mpfr_zeta_at(BigReal(a, bits)) * detail::mpfr_zeta_at(BigReal(b, bits)), ctx.bits());
    return res;
  }

  PolylogExp La(a, bits), Lb(b, bits);
  const bool same = a == b;
  const BigReal cc(c, bits);
  const BigReal half_pi = const_pi(bits) / 2L;

  // Decay rates at both ends fix the x range.
  const double D = (ctx.digits() + ctx.guard()) * std::log(10.0) + 10.0;
  const double left_rate = cd + std::min(ad - 1.0, 0.0) + std::min(bd - 1.0, 0.0);
  const double x_left = std::asinh(D / (left_rate * M_PI / 2.0)) + 0.25;
  double t_right = 1.0;
  while (2.0 * t_right - std::max(cd, 1.0) * std::log(t_right) < D) t_right *= 1.25;
  const double x_right = std::asinh(std::log(t_right) / (M_PI / 2.0)) + 0.25;

  auto node = [&](const BigReal& x) {
    BigReal u = half_pi * sinh(x);
    BigReal t = exp(u);
    BigReal la = La(t, u);
    BigReal lb = same ? la : Lb(t, u);
    res.evaluations += 1;
    return exp(cc * u) * la * lb * half_pi * cosh(x);
  };

  const BigReal tol = ctx.series_tol();
  const int max_levels = 14;
  BigReal h(1L, bits);
  BigReal sum(bits);
  for (long j = -static_cast<long>(std::ceil(x_left)); j <= static_cast<long>(std::ceil(x_right)); ++j)
    sum += node(BigReal(j, bits));
  BigReal estimate = sum;
  for (int level = 1; level <= max_levels; ++level) {
    h /= 2L;
    const double hd = std::ldexp(1.0, -level);
    const long lo = -static_cast<long>(std::ceil(x_left / hd));
    const long hi = static_cast<long>(std::ceil(x_right / hd));
    BigReal fresh(bits);
    for (long j = lo; j <= hi; ++j)
      if (j % 2 != 0) fresh += node(h * j);
    sum += fresh;
    BigReal next = sum * h;
    BigReal diff = abs(next - estimate);
    estimate = next;
    res.levels = level;
    res.error_estimate = BigReal(diff, ctx.bits());
    if (level >= 3 && diff <= tol * max(abs(next), BigReal(1L, bits))) {
      res.value = BigReal(estimate / gamma(cc), ctx.bits());
      return res;
    }
  }
  throw ConvergenceError("direct sum: exp-sinh rule did not converge (estimate " + (estimate / gamma(cc)).to_string(20) + ")");
}

inline BigReal tornheim_direct(const BigReal& a, const BigReal& b, const BigReal& c, const NumericContext& ctx) {
  return tornheim_direct_detailed(a, b, c, ctx).value;
}

inline BigReal tornheim_direct(long a, long b, long c, const NumericContext& ctx) {
  return tornheim_direct(ctx.real(a), ctx.real(b), ctx.real(c), ctx);
}

}  // namespace tornheim::oracle
