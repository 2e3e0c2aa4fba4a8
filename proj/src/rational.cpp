#include "tbbp/rational.hpp"

namespace tbbp {

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::operator-() const { return Rational(mpq_class(-q_)); }

Rational Rational::operator+(const Rational& o) const {
  return Rational(mpq_class(q_ + o.q_));
}

Rational Rational::operator-(const Rational& o) const {
  return Rational(mpq_class(q_ - o.q_));
}

Rational Rational::operator*(const Rational& o) const {
  return Rational(mpq_class(q_ * o.q_));
}

Rational Rational::operator/(const Rational& o) const {
  if (o.is_zero()) throw DomainError("rational division by zero");
  return Rational(mpq_class(q_ / o.q_));
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(q_))); }

Rational Rational::pow(long e) const {
  if (e == 0) return Rational(1);
  if (is_zero() && e < 0) throw DomainError("zero to a negative power");
  mpz_class n, d;
  unsigned long ue = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_pow_ui(n.get_mpz_t(), num().get_mpz_t(), ue);
  mpz_pow_ui(d.get_mpz_t(), den().get_mpz_t(), ue);
  return e > 0 ? Rational(n, d) : Rational(d, n);
}

std::string Rational::to_string() const {
  if (is_integer()) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

}  // namespace tbbp
