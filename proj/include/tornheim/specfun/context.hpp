#pragma once

#include <cmath>

#include "tornheim/errors.hpp"
#include "tornheim/exact/bigreal.hpp"
#include "tornheim/exact/rational.hpp"

namespace tornheim {

/*
 * Target accuracy and the constants derived from it. Working precision is
 * digits + guard decimal digits; series and quadrature stop below
 * 10^-(digits + guard/2).
 */
class NumericContext {
 public:
  explicit NumericContext(int digits = 15, int guard = 10) : digits_(digits), guard_(guard) {
    if (digits < 1 || digits > 2000) throw DomainError("digits must be in 1..2000");
    if (guard < 10) throw DomainError("guard digits must be at least 10");
    bits_ = static_cast<mpfr_prec_t>(std::ceil((digits + guard) * 3.3219280948873623)) + 8;
    pi_ = const_pi(bits_);
    two_pi_ = pi_ * 2L;
    log2_ = const_log2(bits_);
    log_two_pi_ = log(two_pi_);
    euler_gamma_ = const_euler(bits_);
    a_const_ = log_two_pi_ + euler_gamma_;
    half_log_two_pi_ = log_two_pi_ / 2L;
    delta_const_ = half_log_two_pi_ * 2L + euler_gamma_;
    series_tol_ = pow10(-(digits + guard / 2), bits_);
    tolerance_ = pow10(-digits, bits_);
  }

  NumericContext with_digits(int digits) const { return NumericContext(digits, guard_); }

  int digits() const { return digits_; }
  int guard() const { return guard_; }
  mpfr_prec_t bits() const { return bits_; }

  BigReal real(long v) const { return BigReal(v, bits_); }
  BigReal real(const BigRational& q) const { return BigReal(q, bits_); }
  BigReal real(const BigInteger& z) const { return BigReal(z, bits_); }
  BigReal parse(std::string_view s) const { return BigReal::parse(s, bits_); }

  const BigReal& pi() const { return pi_; }
  const BigReal& two_pi() const { return two_pi_; }
  const BigReal& log2() const { return log2_; }
  const BigReal& log_two_pi() const { return log_two_pi_; }
  const BigReal& half_log_two_pi() const { return half_log_two_pi_; }
  const BigReal& euler_gamma() const { return euler_gamma_; }
  // log(2 pi) + gamma
  const BigReal& A_const() const { return a_const_; }
  // 2 log sqrt(2 pi) + gamma
  const BigReal& delta_const() const { return delta_const_; }
  const BigReal& series_tol() const { return series_tol_; }
  const BigReal& tolerance() const { return tolerance_; }

 private:
  int digits_;
  int guard_;
  mpfr_prec_t bits_;
  BigReal pi_, two_pi_, log2_, log_two_pi_, half_log_two_pi_, euler_gamma_, a_const_, delta_const_, series_tol_, tolerance_;
};

}  // namespace tornheim
