#pragma once

#include <vector>

#include "tornheim/errors.hpp"
#include "tornheim/exact/bigreal.hpp"
#include "tornheim/specfun/context.hpp"
#include "tornheim/specfun/zeta.hpp"

namespace tornheim::specfun {

/*
 * Clausen function Cl_n: sum sin(kx)/k^n for even n, sum cos(kx)/k^n for odd n.
 *
 * For n >= 2 the value is the real or imaginary part of Li_n(e^{ix}) expanded
 * about x = 0. With d = n-1 and 0 < x <= pi,
 *
 *   Cl_n(x) = sum_{k = d mod 2, k != d} (-1)^{floor(k/2)} zeta(n-k) x^k / k!
 *           + (-1)^{floor(d/2)} x^d / d! (H_d - log x),
 *
 * where zeta(n-k) is an odd zeta value for k < d and a Bernoulli number for
 * k > d. The series converges like (x/2pi)^k. Other x are mapped into
 * [0, pi] by periodicity and reflection. n = 1 uses -log(2 sin(x/2)).
 */
class ClausenEvaluator {
 public:
  ClausenEvaluator(int order, const NumericContext& ctx) : order_(order), bits_(ctx.bits()), pi_(ctx.pi()), two_pi_(ctx.two_pi()) {
    if (order < 1) throw DomainError("clausen: order must be at least 1");
    if (order == 1) return;
    if (order % 2 == 1) zeta_n_ = riemann_zeta(order, ctx);
    const int d = order - 1;
    const long terms = static_cast<long>(bits_) + 16;
    BigReal fact(1L, bits_);  // k!
    for (long k = 0; k <= terms + order; ++k) {
      if (k > 0) fact *= k;
      if (k % 2 != d % 2) continue;
      if (k == d) {
        coeff_.emplace_back(bits_);
        continue;
      }
      const int sgn = (k / 2) % 2 == 0 ? 1 : -1;
      BigReal z = riemann_zeta(order - k, ctx);
      coeff_.push_back(sgn > 0 ? z / fact : -(z / fact));
    }
    BigRational h = 0;
    for (int i = 1; i <= d; ++i) h += make_rational(1, i);
    BigReal dfact = ctx.real(factorial(d));
    harmonic_ = ctx.real(h);
    log_coeff_ = (d / 2) % 2 == 0 ? 1L / dfact : -(1L / dfact);
  }

  int order() const { return order_; }

  // Cl_n(x) for any real x (Cl_1 needs x off the multiples of 2 pi).
  BigReal operator()(const BigReal& x_in) const {
    BigReal x = fmod(BigReal(x_in, bits_), two_pi_);
    if (x.sign() < 0) x += two_pi_;
    int sgn = 1;
    if (x > pi_) {
      x = two_pi_ - x;
      if (order_ % 2 == 0) sgn = -1;
    }
    BigReal r = reduced(x);
    return sgn > 0 ? r : -r;
  }

  // Cl_n(2 pi q) for q in [0,1], given qc = 1 - q computed accurately.
  BigReal at_two_pi(const BigReal& q, const BigReal& qc) const {
    const bool upper = qc < q;
    BigReal x = two_pi_ * (upper ? qc : q);
    BigReal r = reduced(x);
    return (upper && order_ % 2 == 0) ? -r : r;
  }

 private:
  // 0 <= x <= pi
  BigReal reduced(const BigReal& x) const {
    if (order_ == 1) {
      if (x.is_zero()) throw DomainError("clausen: Cl_1 is singular at multiples of 2 pi");
      return -log(sin(x / 2L) * 2L);
    }
    const int d = order_ - 1;
    if (x.is_zero()) return order_ % 2 == 1 ? zeta_n_ : BigReal(bits_);
    BigReal x2 = x * x;
    BigReal s(bits_);
    for (auto it = coeff_.rbegin(); it != coeff_.rend(); ++it) {
      s *= x2;
      s += *it;
    }
    if (d % 2 == 1) s *= x;
    BigReal xd = pow(x, static_cast<long>(d));
    s += log_coeff_ * xd * (harmonic_ - log(x));
    return s;
  }

  int order_;
  mpfr_prec_t bits_;
  BigReal pi_, two_pi_;
  std::vector<BigReal> coeff_;  // k = d mod 2, d mod 2 + 2, ...; zero at k = d
  BigReal harmonic_, log_coeff_, zeta_n_;
};

inline BigReal clausen(int l, const BigReal& x, const NumericContext& ctx) { return ClausenEvaluator(l, ctx)(x); }

// Partial sum of the defining series with K terms, for cross-checks.
inline BigReal clausen_direct(int l, const BigReal& x, long K) {
  const mpfr_prec_t bits = x.precision();
  BigReal s(bits);
  BigReal c1 = cos(x), sn(bits), cs(1L, bits), sp = -sin(x), cp = c1;
  // Chebyshev recurrence: t_{k+1} = 2 cos x t_k - t_{k-1}
  BigReal two_c = c1 * 2L;
  for (long k = 1; k <= K; ++k) {
    BigReal sk = two_c * sn - sp;
    BigReal ck = two_c * cs - cp;
    sp = sn;
    sn = sk;
    cp = cs;
    cs = ck;
    BigReal den = pow(BigReal(k, bits), static_cast<long>(l));
    s += (l % 2 == 0 ? sn : cs) / den;
  }
  return s;
}

}  // namespace tornheim::specfun
