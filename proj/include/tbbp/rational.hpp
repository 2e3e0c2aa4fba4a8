#pragma once

#include <gmpxx.h>

#include <string>

#include "tbbp/errors.hpp"

namespace tbbp {

/// Exact ratio of arbitrary-precision integers, always in lowest terms with a
/// positive denominator.
class Rational {
public:
  Rational() : q_(0) {}
  Rational(long n) : q_(n) {}              // NOLINT(google-explicit-constructor)
  Rational(const mpz_class& n) : q_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(const mpz_class& num, const mpz_class& den);
  Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

  const mpz_class& num() const { return q_.get_num(); }
  const mpz_class& den() const { return q_.get_den(); }

  bool is_zero() const { return q_ == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rational operator-() const;
  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  bool operator==(const Rational& o) const { return q_ == o.q_; }
  bool operator!=(const Rational& o) const { return q_ != o.q_; }
  bool operator<(const Rational& o) const { return q_ < o.q_; }

  Rational abs() const;
  /// this^e for any integer e; raising zero to a negative power throws.
  Rational pow(long e) const;

  /// "num/den" in lowest terms, or just "num" for integers.
  std::string to_string() const;

  const mpq_class& mpq() const { return q_; }

private:
  explicit Rational(const mpq_class& q) : q_(q) {}
  mpq_class q_;
};

}  // namespace tbbp
