#pragma once

#include <gmpxx.h>

#include <string>

#include "tornheim/errors.hpp"

namespace tornheim {

using BigInteger = mpz_class;
using BigRational = mpq_class;

inline BigRational make_rational(const BigInteger& num, const BigInteger& den) {
  if (den == 0) throw DomainError("zero denominator");
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

inline BigRational make_rational(long num, long den = 1) { return make_rational(BigInteger(num), BigInteger(den)); }

// C(n, k) for any integer n; zero for k < 0. C(-1, 0) = 1.
inline BigInteger binomial(long n, long k) {
  if (k < 0) return 0;
  BigInteger r;
  BigInteger top(n);
  mpz_bin_ui(r.get_mpz_t(), top.get_mpz_t(), static_cast<unsigned long>(k));
  return r;
}

inline BigInteger factorial(long n) {
  if (n < 0) throw DomainError("factorial of a negative integer");
  BigInteger r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

// "5", "-187/24".
inline std::string to_string(const BigRational& q) { return q.get_str(10); }

inline std::string to_string(const BigInteger& z) { return z.get_str(10); }

inline BigRational parse_rational(const std::string& text) {
  BigRational r;
  if (text.empty() || r.set_str(text, 10) != 0) throw ParseError("not a rational number: '" + text + "'");
  if (r.get_den() == 0) throw ParseError("zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

}  // namespace tornheim
