#pragma once

#include <mutex>
#include <vector>

#include "tornheim/errors.hpp"
#include "tornheim/exact/bigreal.hpp"
#include "tornheim/exact/rational.hpp"

namespace tornheim::specfun {

// B_k with B_1 = -1/2. Memoized; safe to call from several threads.
inline BigRational bernoulli_number(int k) {
  if (k < 0) throw DomainError("bernoulli_number: negative index");
  static std::mutex mutex;
  static std::vector<BigRational> table{BigRational(1), make_rational(-1, 2)};
  std::lock_guard<std::mutex> lock(mutex);
  while (static_cast<int>(table.size()) <= k) {
    const int n = static_cast<int>(table.size());
    if (n % 2 == 1) {
      table.emplace_back(0);
      continue;
    }
    // sum_{j=0}^{n} C(n+1, j) B_j = 0
    BigRational s = 0;
    for (int j = 0; j < n; ++j) {
      if (j > 1 && j % 2 == 1) continue;
      s += BigRational(binomial(n + 1, j)) * table[j];
    }
    s /= -(n + 1);
    table.push_back(s);
  }
  return table[k];
}

// Coefficients c_j of B_k(q) = sum_j c_j q^j.
inline std::vector<BigRational> bernoulli_poly_coeffs(int k) {
  if (k < 0) throw DomainError("bernoulli_poly: negative degree");
  std::vector<BigRational> c(k + 1);
  for (int j = 0; j <= k; ++j) c[j] = BigRational(binomial(k, j)) * bernoulli_number(k - j);
  return c;
}

inline BigRational bernoulli_poly(int k, const BigRational& q) {
  auto c = bernoulli_poly_coeffs(k);
  BigRational r = 0;
  for (int j = k; j >= 0; --j) r = r * q + c[j];
  return r;
}

// B_k(q) by Horner at the precision of q.
inline BigReal bernoulli_poly(int k, const BigReal& q) {
  auto c = bernoulli_poly_coeffs(k);
  BigReal r(q.precision());
  for (int j = k; j >= 0; --j) r = r * q + BigReal(c[j], q.precision());
  return r;
}

// B_k(1): equals B_k except B_1(1) = 1/2.
inline BigRational bernoulli_at_one(int k) { return k == 1 ? make_rational(1, 2) : bernoulli_number(k); }

// Precomputed B_k(q) for repeated evaluation inside integrands.
class BernoulliPoly {
 public:
  BernoulliPoly(int k, mpfr_prec_t bits) {
    for (const auto& c : bernoulli_poly_coeffs(k)) coeff_.emplace_back(c, bits);
  }
  BigReal operator()(const BigReal& q) const {
    BigReal r(coeff_.back());
    for (int j = static_cast<int>(coeff_.size()) - 2; j >= 0; --j) {
      r *= q;
      r += coeff_[j];
    }
    return r;
  }
  int degree() const { return static_cast<int>(coeff_.size()) - 1; }

 private:
  std::vector<BigReal> coeff_;
};

}  // namespace tornheim::specfun
