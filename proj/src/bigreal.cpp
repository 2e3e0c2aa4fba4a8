#include "tbbp/bigreal.hpp"

#include <cmath>
#include <cstdlib>

namespace tbbp {

namespace {

// Floor square root with the quadratically convergent integer Newton map,
// seeded from a double computed off the top bits.
mpz_class isqrt_newton(const mpz_class& n) {
  if (n == 0) return 0;
  if (n < 0) throw DomainError("sqrt of negative value");
  long e;
  double d = mpz_get_d_2exp(&e, n.get_mpz_t());
  // seed ~ sqrt(d * 2^e) = sqrt(d') * 2^(e/2)
  if (e % 2 != 0) {
    d *= 2.0;
    e -= 1;
  }
  mpz_class x(std::ldexp(std::sqrt(d), 26) + 2.0);
  long shift = e / 2 - 26;
  if (shift > 0)
    x <<= shift;
  else if (shift < 0)
    x = 3;  // tiny input, any overestimate works
  if (x * x < n) x = n;  // guard: Newton needs a seed >= the root
  while (true) {
    mpz_class y = (x + n / x) >> 1;
    if (y >= x) break;
    x = y;
  }
  // x is now floor(sqrt(n)) up to the classic +-1 boundary; pin it down.
  while (x * x > n) --x;
  while ((x + 1) * (x + 1) <= n) ++x;
  return x;
}

}  // namespace

BigReal BigReal::from_int(long v) {
  BigReal r;
  r.mant_ = v;
  return r;
}

BigReal BigReal::from_mpz(const mpz_class& v) {
  BigReal r;
  r.mant_ = v;
  return r;
}

BigReal BigReal::from_scaled(mpz_class mantissa, long scale_bits) {
  if (scale_bits < 0) throw DomainError("negative scale_bits");
  BigReal r;
  r.mant_ = std::move(mantissa);
  r.scale_bits_ = scale_bits;
  r.prec_bits_ = scale_bits;
  return r;
}

BigReal BigReal::from_rational(const Rational& r, long prec_bits) {
  return div(from_mpz(r.num()), from_mpz(r.den()), prec_bits);
}

BigReal BigReal::add(const BigReal& a, const BigReal& b) {
  BigReal r;
  long s = std::max(a.scale_bits_, b.scale_bits_);
  r.mant_ = (a.mant_ << (s - a.scale_bits_)) + (b.mant_ << (s - b.scale_bits_));
  r.scale_bits_ = s;
  r.prec_bits_ = std::max(a.prec_bits_, b.prec_bits_);
  return r;
}

BigReal BigReal::sub(const BigReal& a, const BigReal& b) { return add(a, b.neg()); }

BigReal BigReal::mul(const BigReal& a, const BigReal& b) {
  BigReal r;
  r.mant_ = a.mant_ * b.mant_;
  r.scale_bits_ = a.scale_bits_ + b.scale_bits_;
  r.prec_bits_ = std::max(a.prec_bits_, b.prec_bits_);
  return r;
}

BigReal BigReal::mul_trunc(const BigReal& a, const BigReal& b, long prec_bits) {
  return mul(a, b).truncated(prec_bits);
}

BigReal BigReal::div(const BigReal& a, const BigReal& b, long prec_bits) {
  if (b.mant_ == 0) throw DomainError("division by zero");
  if (prec_bits < 0) throw DomainError("negative precision");
  BigReal r;
  long e = prec_bits + b.scale_bits_ - a.scale_bits_;
  mpz_class num = a.mant_, den = b.mant_;
  if (e >= 0)
    num <<= e;
  else
    den <<= -e;
  mpz_tdiv_q(r.mant_.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  r.scale_bits_ = prec_bits;
  r.prec_bits_ = prec_bits;
  return r;
}

BigReal BigReal::sqrt(const BigReal& a, long prec_bits) {
  if (a.sign() < 0) throw DomainError("sqrt of negative value");
  if (a.is_zero()) return BigReal();
  // For a < 1 the relative contract |r^2 - a| < 2^(1-p) * a needs extra
  // working bits proportional to -log2(a)/2.
  long p = prec_bits;
  long lg = a.exponent_floor();
  if (lg < 0) p += (-lg + 1) / 2 + 2;
  if (2 * p < a.scale_bits_) p = (a.scale_bits_ + 1) / 2 + 1;
  mpz_class n = a.mant_ << (2 * p - a.scale_bits_);
  BigReal r;
  r.mant_ = isqrt_newton(n);
  r.scale_bits_ = p;
  r.prec_bits_ = prec_bits;
  return r;
}

BigReal BigReal::neg() const {
  BigReal r = *this;
  r.mant_ = -r.mant_;
  return r;
}

BigReal BigReal::abs() const { return sign() < 0 ? neg() : *this; }

BigReal BigReal::ldexp(long k) const {
  BigReal r = *this;
  if (k >= 0) {
    if (r.scale_bits_ >= k)
      r.scale_bits_ -= k;
    else {
      r.mant_ <<= (k - r.scale_bits_);
      r.scale_bits_ = 0;
    }
  } else {
    r.scale_bits_ += -k;
  }
  return r;
}

BigReal BigReal::truncated(long scale_bits) const {
  if (scale_bits < 0) throw DomainError("negative scale_bits");
  BigReal r;
  r.scale_bits_ = scale_bits;
  r.prec_bits_ = scale_bits;
  if (scale_bits >= scale_bits_) {
    r.mant_ = mant_ << (scale_bits - scale_bits_);
  } else {
    mpz_tdiv_q_2exp(r.mant_.get_mpz_t(), mant_.get_mpz_t(),
                    static_cast<mp_bitcnt_t>(scale_bits_ - scale_bits));
  }
  return r;
}

BigReal BigReal::mul_int(long v) const {
  BigReal r = *this;
  r.mant_ *= v;
  return r;
}

BigReal BigReal::mul_rational(const Rational& r, long prec_bits) const {
  BigReal t = *this;
  t.mant_ *= r.num();
  if (r.den() == 1) return t.truncated(std::max(prec_bits, long(0)));
  return div(t, from_mpz(r.den()), prec_bits);
}

int BigReal::cmp(const BigReal& a, const BigReal& b) {
  long s = std::max(a.scale_bits_, b.scale_bits_);
  mpz_class ma = a.mant_ << (s - a.scale_bits_);
  mpz_class mb = b.mant_ << (s - b.scale_bits_);
  return ::cmp(ma, mb);
}

std::string BigReal::to_radix_string(int radix, long digits) const {
  if (radix != 3 && radix != 10) throw DomainError("radix must be 3 or 10");
  if (digits < 0) throw DomainError("negative digit count");
  // log2(3) = 1.58496..., log2(10) = 3.32192...; demand 8 guard digits.
  double bits_per_digit = radix == 3 ? 1.5849625007211562 : 3.321928094887362;
  long max_digits =
      static_cast<long>(static_cast<double>(scale_bits_) / bits_per_digit) - 8;
  if (digits > max_digits) {
    throw Error("requested " + std::to_string(digits) +
                " fractional digits but the value's precision supports only " +
                std::to_string(std::max(max_digits, long(0))) +
                " (short by " + std::to_string(digits - std::max(max_digits, long(0))) +
                ")");
  }
  mpz_class a = ::abs(mant_);
  mpz_class ip = a >> scale_bits_;
  mpz_class fp = a - (ip << scale_bits_);
  std::string out = sign() < 0 ? "-" : "";
  out += ip.get_str(radix);
  if (digits == 0) return out;
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(radix),
                static_cast<unsigned long>(digits));
  mpz_class frac_digits = (fp * p) >> scale_bits_;
  std::string f = frac_digits.get_str(radix);
  out += ".";
  out += std::string(static_cast<std::size_t>(digits) - f.size(), '0');
  out += f;
  return out;
}

double BigReal::to_double() const {
  mpq_class q(mant_);
  q /= mpq_class(mpz_class(1) << scale_bits_);
  return q.get_d();
}

long BigReal::exponent_floor() const {
  if (mant_ == 0) throw DomainError("log2 of zero");
  // sizeinbase gives the bit length; mantissa in [2^(L-1), 2^L).
  long bl = static_cast<long>(mpz_sizeinbase(mant_.get_mpz_t(), 2));
  return bl - 1 - scale_bits_;
}

}  // namespace tbbp
