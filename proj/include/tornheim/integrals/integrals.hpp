#pragma once

#include <string>

#include "tornheim/errors.hpp"
#include "tornheim/exact/bigreal.hpp"
#include "tornheim/exact/rational.hpp"
#include "tornheim/integrals/quadrature.hpp"
#include "tornheim/specfun/bernoulli.hpp"
#include "tornheim/specfun/clausen.hpp"
#include "tornheim/specfun/context.hpp"
#include "tornheim/specfun/kernels.hpp"
#include "tornheim/specfun/zeta.hpp"

namespace tornheim::integrals {

using specfun::BernoulliPoly;
using specfun::ClausenEvaluator;
using specfun::four_parity;
using specfun::KernelEvaluator;
using specfun::riemann_zeta;

namespace detail {

inline std::string label(const char* fam, int a, int b) {
  return std::string(fam) + "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

inline BigReal log_sin_pi(const BigReal& q, const BigReal& qc, const NumericContext& ctx) {
  return log(sin(ctx.pi() * min(q, qc)));
}

inline BigReal A_at(int k, const BigReal& q, const NumericContext& ctx) { return specfun::bernoulli_fn_A(k, q, ctx); }

constexpr quad::SingularEnds kBothEnds{true, true};

}  // namespace detail

/*
 * X_{k,l} = p_l l!/(2pi)^l int_0^1 log Gamma(q) B_k(q) Cl_{l+1}(2 pi q) dq
 */
inline BigReal X_integral(int k, int l, const NumericContext& ctx) {
  if (k < 0 || l < 0) throw DomainError("X_integral: indices must be non-negative");
  BernoulliPoly B(k, ctx.bits());
  ClausenEvaluator cl(l + 1, ctx);
  auto f = [&](const BigReal& q, const BigReal& qc) { return lngamma(q) * B(q) * cl.at_two_pi(q, qc); };
  BigReal v = quad::integrate01(f, ctx, detail::kBothEnds, detail::label("X", k, l));
  BigReal pre = ctx.real(factorial(l)) / pow(ctx.two_pi(), static_cast<long>(l));
  return four_parity(l) > 0 ? pre * v : -(pre * v);
}

/*
 * Closed forms for k = 0:
 *   even n: X_{0,n} = p_n n!/(2pi)^n zeta(n+2)/4
 *   odd n:  X_{0,n} = p_n n!/(2pi)^n (A zeta(n+2) - zeta'(n+2)) / (2 pi),  A = log 2pi + gamma
 */
inline BigReal X_zero_closed(int n, const NumericContext& ctx) {
  if (n < 0) throw DomainError("X_zero_closed: n must be non-negative");
  BigReal pre = ctx.real(factorial(n)) / pow(ctx.two_pi(), static_cast<long>(n));
  if (four_parity(n) < 0) pre = -pre;
  if (n % 2 == 0) return pre * riemann_zeta(n + 2, ctx) / 4L;
  BigReal dz = specfun::hurwitz_zeta_sderiv(ctx.real(n + 2L), ctx.real(1L), ctx);
  return pre * (ctx.A_const() * riemann_zeta(n + 2, ctx) - dz) / ctx.two_pi();
}

// 2(2pi)^{N-2}/(m!(N-m-2)!) sum_{j=0}^m (-1)^j C(m,j) X_{j,N-2-j}
inline BigReal Y_plain(int m, int n, const NumericContext& ctx) {
  const int N = m + n;
  if (m < 1 || n < 2 || N % 2 != 0) throw DomainError("Y: needs m >= 1, n >= 2 and m+n even");
  BigReal s(ctx.bits());
  for (int j = 0; j <= m; ++j) {
    BigReal x = X_integral(j, N - 2 - j, ctx) * ctx.real(binomial(m, j));
    if (j % 2 == 0) {
      s += x;
    } else {
      s -= x;
    }
  }
  BigReal pre = pow(ctx.two_pi(), static_cast<long>(N - 2)) * 2L / ctx.real(BigInteger(factorial(m) * factorial(N - m - 2)));
  return pre * s;
}

// Coefficient of zeta(N-1) log 2pi in Y*_{m,n}: (-1)^{N/2-1} C(N-2, m-1).
inline BigInteger ystar_log_coefficient(int m, int n) {
  const int N = m + n;
  BigInteger c = binomial(N - 2, m - 1);
  return (N / 2 - 1) % 2 == 0 ? c : BigInteger(-c);
}

inline BigReal Y_star(int m, int n, const NumericContext& ctx) {
  BigReal y = Y_plain(m, n, ctx);
  return y + ctx.real(ystar_log_coefficient(m, n)) * riemann_zeta(m + n - 1, ctx) * ctx.log_two_pi();
}

// W_{m,n} = int B_m K_n by quadrature.
inline BigReal W_integral(int m, int n, const NumericContext& ctx) {
  BernoulliPoly B(m, ctx.bits());
  KernelEvaluator K(n, ctx);
  auto f = [&](const BigReal& q, const BigReal& qc) { return B(q) * K(q, qc); };
  return quad::integrate01(f, ctx, {n == 0, n == 0}, detail::label("W", m, n));
}

// W_{r,0}: log 2 for r = 0, 0 for odd r, (-1)^{r/2+1} r! zeta(r+1)/(2pi)^r for even r > 0.
inline BigReal W_closed(int r, const NumericContext& ctx) {
  if (r < 0) throw DomainError("W_closed: r must be non-negative");
  if (r == 0) return ctx.log2();
  if (r % 2 == 1) return ctx.real(0L);
  BigReal v = ctx.real(factorial(r)) * riemann_zeta(r + 1, ctx) / pow(ctx.two_pi(), static_cast<long>(r));
  return (r / 2) % 2 == 1 ? v : -v;
}

/*
 * W_{m,n} = sum_{k=1}^n (-1)^{k+1} n^{(k-1)}/(m+1)_k B_{m+k}(1) K_{n-k+1}(1) + (-1)^n n!/(m+1)_n W_{m+n,0},
 * n^{(j)} the falling factorial, from K_n' = n K_{n-1}.
 */
inline BigReal W_exact(int m, int n, const NumericContext& ctx) {
  if (m < 0 || n < 0) throw DomainError("W_exact: indices must be non-negative");
  if (n == 0) return W_closed(m, ctx);
  BigReal s(ctx.bits());
  BigInteger rising = 1, falling = 1;
  for (int k = 1; k <= n; ++k) {
    rising *= m + k;
    if (k > 1) falling *= n - k + 2;
    BigRational b = specfun::bernoulli_at_one(m + k);
    if (b == 0) continue;
    BigReal t = ctx.real(BigRational(falling) * b / BigRational(rising)) * specfun::kernel_K_at_one(n - k + 1, ctx);
    if (k % 2 == 1) {
      s += t;
    } else {
      s -= t;
    }
  }
  BigReal tail = W_closed(m + n, ctx) * ctx.real(factorial(n)) / ctx.real(rising);
  return n % 2 == 0 ? s + tail : s - tail;
}

// B_a B_b = sum_j c_j B_j(q) + c_0: coefficients indexed by degree j.
inline std::vector<BigRational> bernoulli_product(int a, int b) {
  std::vector<BigRational> c(a + b + 1);
  if (a == 0 || b == 0) {
    c[a + b] = 1;
    return c;
  }
  const int kmax = std::max(a / 2, b / 2);
  for (int k = 0; k <= kmax; ++k) {
    BigRational w = BigRational(binomial(b, 2 * k) * a + binomial(a, 2 * k) * b) * specfun::bernoulli_number(2 * k);
    if (w == 0) continue;
    c[a + b - 2 * k] += w / (a + b - 2 * k);
  }
  BigRational tail = BigRational(factorial(a) * factorial(b)) / BigRational(factorial(a + b)) * specfun::bernoulli_number(a + b);
  c[0] += (a % 2 == 0) ? BigRational(-tail) : tail;
  return c;
}

inline BigReal V_integral(int k, int m, int n, const NumericContext& ctx) {
  BernoulliPoly Bk(k, ctx.bits()), Bm(m, ctx.bits());
  KernelEvaluator K(n, ctx);
  auto f = [&](const BigReal& q, const BigReal& qc) { return Bk(q) * Bm(q) * K(q, qc); };
  return quad::integrate01(f, ctx, {n == 0, n == 0}, "V(" + std::to_string(k) + "," + std::to_string(m) + "," + std::to_string(n) + ")");
}

// V_{k,m,n} through the Bernoulli product expansion and W_exact.
inline BigReal V_exact(int k, int m, int n, const NumericContext& ctx) {
  auto c = bernoulli_product(k, m);
  BigReal s(ctx.bits());
  for (int j = 0; j < static_cast<int>(c.size()); ++j)
    if (c[j] != 0) s += ctx.real(c[j]) * W_exact(j, n, ctx);
  return s;
}

// U_{k,l} = int log Gamma(q) B_k(q) K_l(q) dq
inline BigReal U_integral(int k, int l, const NumericContext& ctx) {
  BernoulliPoly B(k, ctx.bits());
  KernelEvaluator K(l, ctx);
  auto f = [&](const BigReal& q, const BigReal& qc) { return lngamma(q) * B(q) * K(q, qc); };
  return quad::integrate01(f, ctx, detail::kBothEnds, detail::label("U", k, l));
}

// U*_{k,l} = int A_1(q) B_k(q) K_l(q) dq = U_{k,l} - log sqrt(2pi) W_{k,l}
inline BigReal U_star(int k, int l, const NumericContext& ctx) {
  return U_integral(k, l, ctx) - ctx.half_log_two_pi() * W_integral(k, l, ctx);
}

enum class BasicFamily { I_BB, I_AB, I_AA, J_AA };

inline const char* family_name(BasicFamily f) {
  switch (f) {
    case BasicFamily::I_BB: return "I_BB";
    case BasicFamily::I_AB: return "I_AB";
    case BasicFamily::I_AA: return "I_AA";
    case BasicFamily::J_AA: return "J_AA";
  }
  return "";
}

/*
 * With K = log sin(pi q):
 *   I_BB(k,l) = int B_k B_l K
 *   I_AB(k,l) = 1/pi int A_k B_l K
 *   I_AA(k,l) = 1/pi^2 int A_k A_l K
 *   J_AA(k,l) = 1/pi^2 int A_k(q) A_l(1-q) K
 */
inline BigReal basic_integral(BasicFamily fam, int k, int l, const NumericContext& ctx) {
  if (k < 0 || l < 0) throw DomainError("basic_integral: indices must be non-negative");
  const std::string what = detail::label(family_name(fam), k, l);
  switch (fam) {
    case BasicFamily::I_BB: {
      BernoulliPoly Bk(k, ctx.bits()), Bl(l, ctx.bits());
      auto f = [&](const BigReal& q, const BigReal& qc) { return Bk(q) * Bl(q) * detail::log_sin_pi(q, qc, ctx); };
      return quad::integrate01(f, ctx, detail::kBothEnds, what);
    }
    case BasicFamily::I_AB: {
      if (k < 1) throw DomainError("I_AB: k must be at least 1");
      BernoulliPoly Bl(l, ctx.bits());
      auto f = [&](const BigReal& q, const BigReal& qc) {
        return detail::A_at(k, q, ctx) * Bl(q) * detail::log_sin_pi(q, qc, ctx);
      };
      return quad::integrate01(f, ctx, detail::kBothEnds, what) / ctx.pi();
    }
    case BasicFamily::I_AA: {
      if (k < 1 || l < 1) throw DomainError("I_AA: indices must be at least 1");
      auto f = [&](const BigReal& q, const BigReal& qc) {
        return detail::A_at(k, q, ctx) * detail::A_at(l, q, ctx) * detail::log_sin_pi(q, qc, ctx);
      };
      BigReal pi2 = ctx.pi() * ctx.pi();
      return quad::integrate01(f, ctx, detail::kBothEnds, what) / pi2;
    }
    case BasicFamily::J_AA: {
      if (k < 1 || l < 1) throw DomainError("J_AA: indices must be at least 1");
      auto f = [&](const BigReal& q, const BigReal& qc) {
        return detail::A_at(k, q, ctx) * detail::A_at(l, qc, ctx) * detail::log_sin_pi(q, qc, ctx);
      };
      BigReal pi2 = ctx.pi() * ctx.pi();
      return quad::integrate01(f, ctx, detail::kBothEnds, what) / pi2;
    }
  }
  throw DomainError("basic_integral: unknown family");
}

// zeta(m) zeta(n) - zeta(m+n)/2
inline BigReal L1_closed(int m, int n, const NumericContext& ctx) {
  return riemann_zeta(m, ctx) * riemann_zeta(n, ctx) - riemann_zeta(m + n, ctx) / 2L;
}

// The same quantity from the parity-split Gamma/Beta form.
inline BigReal L1_parity_form(int m, int n, const NumericContext& ctx) {
  if (m < 2 || n < 2) throw DomainError("L1_parity_form: m, n must be at least 2");
  using specfun::zeta_one_minus;
  using specfun::zeta_prime_neg_even;
  const BigReal beta = ctx.real(BigRational(factorial(m - 1) * factorial(n - 1)) / BigRational(factorial(m + n - 1)));
  const BigReal gg = ctx.real(BigInteger(factorial(m - 1) * factorial(n - 1)));
  const int sign = four_parity(m) * four_parity(n);
  BigReal v(ctx.bits());
  // zeta'(1-k) for odd k >= 3
  auto zp = [&](int k) { return zeta_prime_neg_even((k - 1) / 2, ctx); };
  auto z = [&](int k) { return ctx.real(zeta_one_minus(k)); };
  if (m % 2 == 0 && n % 2 == 0) {
    v = pow(ctx.two_pi(), static_cast<long>(m + n)) / (gg * 4L) * (z(m) * z(n) - beta * z(m + n));
  } else if (m % 2 == 0) {
    v = pow(ctx.two_pi(), static_cast<long>(m + n - 1)) / gg * (z(m) * zp(n) - beta * zp(m + n));
  } else if (n % 2 == 0) {
    v = pow(ctx.two_pi(), static_cast<long>(m + n - 1)) / gg * (zp(m) * z(n) - beta * zp(m + n));
  } else {
    BigReal pi2 = ctx.pi() * ctx.pi();
    v = pow(ctx.two_pi(), static_cast<long>(m + n)) / (gg * 4L) * (zp(m) * zp(n) * 4L / pi2 + beta * z(m + n));
  }
  return sign > 0 ? v : -v;
}

/*
 * T(m,0,n) = zeta(m) zeta(n) - zeta(m+n)/2 + p_{m+n} (2pi)^{m+n-1}/(m! n!) L2, with
 *   m, n even:       L2 = m I_AB(m-1,n) + n I_AB(m,n-1)
 *   m, n odd:        L2 = m I_AB(n,m-1) + n I_AB(n-1,m)
 *   m odd, n even:   L2 = (m I_BB(m-1,n) + n I_BB(m,n-1)) / 2
 *   m even, n odd:   L2 = -m I_AA(m-1,n) - n I_AA(m,n-1) - m J_AA(m-1,n) + n J_AA(m,n-1)
 */
inline BigReal tornheim_via_basic_integrals(int m, int n, const NumericContext& ctx) {
  if (m < 2 || n < 2) throw DomainError("tornheim_via_basic_integrals: m, n must be at least 2");
  using F = BasicFamily;
  auto I = [&](F f, int a, int b) { return basic_integral(f, a, b, ctx); };
  BigReal l2(ctx.bits());
  if (m % 2 == 0 && n % 2 == 0) {
    l2 = I(F::I_AB, m - 1, n) * static_cast<long>(m) + I(F::I_AB, m, n - 1) * static_cast<long>(n);
  } else if (m % 2 == 1 && n % 2 == 1) {
    l2 = I(F::I_AB, n, m - 1) * static_cast<long>(m) + I(F::I_AB, n - 1, m) * static_cast<long>(n);
  } else if (m % 2 == 1) {
    l2 = (I(F::I_BB, m - 1, n) * static_cast<long>(m) + I(F::I_BB, m, n - 1) * static_cast<long>(n)) / 2L;
  } else {
    l2 = -(I(F::I_AA, m - 1, n) * static_cast<long>(m)) - I(F::I_AA, m, n - 1) * static_cast<long>(n) -
         I(F::J_AA, m - 1, n) * static_cast<long>(m) + I(F::J_AA, m, n - 1) * static_cast<long>(n);
  }
  BigReal pre = pow(ctx.two_pi(), static_cast<long>(m + n - 1)) / ctx.real(BigInteger(factorial(m) * factorial(n)));
  if (four_parity(m + n) < 0) pre = -pre;
  return L1_closed(m, n, ctx) + pre * l2;
}

}  // namespace tornheim::integrals
