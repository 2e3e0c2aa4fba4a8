#pragma once

#include "tbbp/bigreal.hpp"

namespace tbbp {

/// Componentwise complex number over BigReal.
struct BigComplex {
  BigReal re;
  BigReal im;

  static BigComplex add(const BigComplex& a, const BigComplex& b) {
    return {BigReal::add(a.re, b.re), BigReal::add(a.im, b.im)};
  }
  static BigComplex sub(const BigComplex& a, const BigComplex& b) {
    return {BigReal::sub(a.re, b.re), BigReal::sub(a.im, b.im)};
  }
  static BigComplex mul_trunc(const BigComplex& a, const BigComplex& b,
                              long prec_bits) {
    BigReal re = BigReal::sub(BigReal::mul(a.re, b.re), BigReal::mul(a.im, b.im));
    BigReal im = BigReal::add(BigReal::mul(a.re, b.im), BigReal::mul(a.im, b.re));
    return {re.truncated(prec_bits), im.truncated(prec_bits)};
  }
  /// Divide both parts by a positive integer, truncating at prec_bits.
  BigComplex div_mpz(const mpz_class& d, long prec_bits) const {
    BigReal den = BigReal::from_mpz(d);
    return {BigReal::div(re, den, prec_bits), BigReal::div(im, den, prec_bits)};
  }
};

}  // namespace tbbp
