#pragma once

#include <vector>

#include "tornheim/errors.hpp"
#include "tornheim/exact/bigreal.hpp"
#include "tornheim/specfun/clausen.hpp"
#include "tornheim/specfun/context.hpp"
#include "tornheim/specfun/zeta.hpp"

namespace tornheim::specfun {

/*
 * Bernoulli function A_k(q) = k zeta'(1-k, q); A_1(q) = log Gamma(q) - log sqrt(2 pi).
 * For k >= 2 the value at q = 0 is the limit A_k(0) = A_k(1).
 */
inline BigReal bernoulli_fn_A(int k, const BigReal& q, const NumericContext& ctx) {
  if (k < 1) throw DomainError("bernoulli_fn_A: k must be at least 1");
  if (q.sign() < 0 || q > 1L) throw DomainError("bernoulli_fn_A: q must lie in [0,1]");
  if (k == 1) {
    if (q.is_zero()) throw DomainError("bernoulli_fn_A: A_1 is singular at 0");
    return log_gamma(q, ctx) - ctx.half_log_two_pi();
  }
  BigReal qq = q.is_zero() ? ctx.real(1L) : BigReal(q, ctx.bits());
  return hurwitz_zeta_sderiv(ctx.real(1L - k), qq, ctx) * static_cast<long>(k);
}

/*
 * K_0(q) = -log sin(pi q), and for n >= 1
 *
 *   K_n(q) = q^n log 2 + n! sum_{k=1}^{floor(n/2)} (-1)^{k+1} zeta(2k+1) q^{n-2k} / ((2pi)^{2k} (n-2k)!)
 *          + p_n n!/(2pi)^n Cl_{n+1}(2 pi q),
 *
 * p_n the 4-parity. Evaluated with q and 1-q both at hand.
 */
class KernelEvaluator {
 public:
  KernelEvaluator(int n, const NumericContext& ctx) : n_(n), bits_(ctx.bits()), pi_(ctx.pi()), clausen_(n + 1, ctx) {
    if (n < 0) throw DomainError("kernel_K: n must be non-negative");
    if (n == 0) return;
    poly_.assign(n + 1, BigReal(bits_));
    poly_[n] = ctx.log2();
    const BigReal nf = ctx.real(factorial(n));
    for (int k = 1; k <= n / 2; ++k) {
      BigReal c = nf * riemann_zeta(2 * k + 1, ctx) / (pow(ctx.two_pi(), 2L * k) * ctx.real(factorial(n - 2 * k)));
      poly_[n - 2 * k] += k % 2 == 1 ? c : -c;
    }
    clausen_coeff_ = nf / pow(ctx.two_pi(), static_cast<long>(n));
    if (four_parity(n) < 0) clausen_coeff_ = -clausen_coeff_;
  }

  BigReal operator()(const BigReal& q, const BigReal& qc) const {
    if (n_ == 0) {
      BigReal t = min(q, qc);
      if (!(t > 0L)) throw DomainError("kernel_K: K_0 is singular at the endpoints");
      return -log(sin(pi_ * t));
    }
    BigReal p(poly_.back());
    for (int j = n_ - 1; j >= 0; --j) {
      p *= q;
      p += poly_[j];
    }
    return p + clausen_coeff_ * clausen_.at_two_pi(q, qc);
  }

  int order() const { return n_; }

 private:
  int n_;
  mpfr_prec_t bits_;
  BigReal pi_;
  ClausenEvaluator clausen_;
  std::vector<BigReal> poly_;
  BigReal clausen_coeff_;
};

inline BigReal kernel_K(int n, const BigReal& q, const NumericContext& ctx) {
  BigReal qq(q, ctx.bits());
  return KernelEvaluator(n, ctx)(qq, ctx.real(1L) - qq);
}

// K_n(1) = log 2 + n! sum_{k=1}^{floor((n-1)/2)} (-1)^{k+1} zeta(2k+1) / ((2pi)^{2k} (n-2k)!)
inline BigReal kernel_K_at_one(int n, const NumericContext& ctx) {
  if (n < 1) throw DomainError("kernel_K_at_one: n must be at least 1");
  BigReal s = ctx.log2();
  const BigReal nf = ctx.real(factorial(n));
  for (int k = 1; k <= (n - 1) / 2; ++k) {
    BigReal c = nf * riemann_zeta(2 * k + 1, ctx) / (pow(ctx.two_pi(), 2L * k) * ctx.real(factorial(n - 2 * k)));
    s += k % 2 == 1 ? c : -c;
  }
  return s;
}

}  // namespace tornheim::specfun
