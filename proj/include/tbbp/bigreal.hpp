#pragma once

#include <gmpxx.h>

#include <string>

#include "tbbp/errors.hpp"
#include "tbbp/rational.hpp"

namespace tbbp {

/// Fixed-point real number: value = mantissa / 2^scale_bits.
///
/// There is no hidden rounding state. add/sub/mul are exact (scales are
/// reconciled or summed); div, sqrt and truncate round toward zero and are
/// correct to one unit in the last place of the result scale. Values are
/// immutable; every operation is a pure function, so instances may be shared
/// freely across threads.
class BigReal {
public:
  BigReal() : mant_(0), scale_bits_(0), prec_bits_(0) {}

  static BigReal from_int(long v);
  static BigReal from_mpz(const mpz_class& v);
  /// Exact mantissa/scale constructor.
  static BigReal from_scaled(mpz_class mantissa, long scale_bits);
  /// Rounds num/den to prec_bits fractional bits (toward zero).
  static BigReal from_rational(const Rational& r, long prec_bits);

  const mpz_class& mantissa() const { return mant_; }
  long scale_bits() const { return scale_bits_; }
  long precision_bits() const { return prec_bits_; }

  bool is_zero() const { return mant_ == 0; }
  int sign() const { return sgn(mant_); }

  static BigReal add(const BigReal& a, const BigReal& b);
  static BigReal sub(const BigReal& a, const BigReal& b);
  /// Exact product; result scale is the sum of the operand scales.
  static BigReal mul(const BigReal& a, const BigReal& b);
  /// Product truncated to prec_bits.
  static BigReal mul_trunc(const BigReal& a, const BigReal& b, long prec_bits);
  static BigReal div(const BigReal& a, const BigReal& b, long prec_bits);
  /// Square root by Newton iteration from a machine-precision seed, exact
  /// floor at the result scale. Requires a >= 0.
  static BigReal sqrt(const BigReal& a, long prec_bits);

  BigReal neg() const;
  BigReal abs() const;
  /// Multiply by 2^k (exact).
  BigReal ldexp(long k) const;
  /// Reduce (or extend) the scale; reduction truncates toward zero.
  BigReal truncated(long scale_bits) const;
  /// Exact product with a small integer.
  BigReal mul_int(long v) const;
  /// Exact product with a rational, then truncation to prec_bits.
  BigReal mul_rational(const Rational& r, long prec_bits) const;

  /// Three-way comparison of the represented values.
  static int cmp(const BigReal& a, const BigReal& b);
  bool operator==(const BigReal& o) const { return cmp(*this, o) == 0; }
  bool operator<(const BigReal& o) const { return cmp(*this, o) < 0; }
  bool operator<=(const BigReal& o) const { return cmp(*this, o) <= 0; }

  /// Sign, integer part and exactly `digits` fractional digits of the
  /// truncation of the value in the given radix (3 or 10), computed by exact
  /// integer scaling. Requires enough scale bits to back the request.
  std::string to_radix_string(int radix, long digits) const;
  std::string to_decimal(long digits) const { return to_radix_string(10, digits); }

  double to_double() const;
  /// floor(log2 |x|); requires a nonzero value.
  long exponent_floor() const;

private:
  mpz_class mant_;
  long scale_bits_;
  long prec_bits_;
};

}  // namespace tbbp
