#include "tbbp/constant_expr.hpp"

#include <algorithm>
#include <cctype>

#include "tbbp/errors.hpp"

namespace tbbp {

const char* const_name_str(ConstName c) {
  switch (c) {
    case ConstName::pi: return "pi";
    case ConstName::ln2: return "ln2";
    case ConstName::ln3: return "ln3";
    case ConstName::zeta3: return "zeta3";
    case ConstName::zeta5: return "zeta5";
    case ConstName::cl2_pi3: return "cl2_pi3";
    case ConstName::cl4_pi3: return "cl4_pi3";
    case ConstName::sqrt3: return "sqrt3";
  }
  return "?";
}

std::optional<ConstName> const_name_parse(std::string_view s) {
  for (ConstName c : kAllConstNames)
    if (s == const_name_str(c)) return c;
  return std::nullopt;
}

ConstantExpr ConstantExpr::term(const Rational& coeff, Monomial m) {
  ConstantExpr e;
  e.add_term(coeff, m);
  return e;
}

void ConstantExpr::add_term(const Rational& coeff, const Monomial& m) {
  if (coeff.is_zero()) return;
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), m,
      [](const auto& t, const Monomial& key) { return t.second < key; });
  if (it != terms_.end() && it->second == m) {
    Rational c = it->first + coeff;
    if (c.is_zero())
      terms_.erase(it);
    else
      it->first = c;
  } else {
    terms_.insert(it, {coeff, m});
  }
}

ConstantExpr ConstantExpr::operator+(const ConstantExpr& o) const {
  ConstantExpr e = *this;
  for (const auto& [c, m] : o.terms_) e.add_term(c, m);
  return e;
}

ConstantExpr ConstantExpr::operator-(const ConstantExpr& o) const {
  ConstantExpr e = *this;
  for (const auto& [c, m] : o.terms_) e.add_term(-c, m);
  return e;
}

ConstantExpr ConstantExpr::scaled(const Rational& c) const {
  ConstantExpr e;
  if (c.is_zero()) return e;
  for (const auto& [w, m] : terms_) e.add_term(w * c, m);
  return e;
}

namespace {

struct Cursor {
  std::string_view s;
  std::size_t i = 0;
  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  char peek() {
    skip();
    return i < s.size() ? s[i] : '\0';
  }
  bool accept(char c) {
    skip();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
};

mpz_class parse_uint(Cursor& c) {
  c.skip();
  std::size_t start = c.i;
  while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i])))
    ++c.i;
  if (c.i == start) throw ParseError("expected an unsigned integer", start);
  return mpz_class(std::string(c.s.substr(start, c.i - start)), 10);
}

std::string parse_ident(Cursor& c) {
  c.skip();
  std::size_t start = c.i;
  while (c.i < c.s.size() &&
         (std::isalnum(static_cast<unsigned char>(c.s[c.i])) || c.s[c.i] == '_'))
    ++c.i;
  if (c.i == start) throw ParseError("expected a constant name", start);
  return std::string(c.s.substr(start, c.i - start));
}

}  // namespace

ConstantExpr ConstantExpr::parse(std::string_view text) {
  Cursor c{text};
  ConstantExpr e;
  bool first = true;
  while (true) {
    c.skip();
    if (c.i >= c.s.size()) {
      if (first) throw ParseError("empty constant expression", c.i);
      break;
    }
    int sign = 1;
    if (c.accept('-'))
      sign = -1;
    else if (c.accept('+'))
      sign = 1;
    else if (!first)
      throw ParseError("expected '+' or '-'", c.i);

    mpz_class num = parse_uint(c);
    mpz_class den = 1;
    if (c.accept('/')) den = parse_uint(c);
    if (den == 0) throw ParseError("zero denominator", c.i);
    Rational coeff = Rational(sign * num, den);

    Monomial m;
    while (c.accept('*')) {
      std::size_t at = c.i;
      std::string name = parse_ident(c);
      auto cn = const_name_parse(name);
      if (!cn) {
        std::string allowed;
        for (ConstName k : kAllConstNames) {
          if (!allowed.empty()) allowed += ", ";
          allowed += const_name_str(k);
        }
        throw ParseError("unknown constant '" + name + "' (allowed: " + allowed + ")",
                         at);
      }
      int pow = 1;
      if (c.accept('^')) {
        mpz_class p = parse_uint(c);
        if (!p.fits_sint_p() || p.get_si() < 1 || p.get_si() > 64)
          throw ParseError("power out of range", c.i);
        pow = static_cast<int>(p.get_si());
      }
      m.powers[*cn] += pow;
    }
    // A bare "0" term contributes nothing; anything else with an empty
    // monomial is a plain rational, which the alphabet does not include.
    if (m.powers.empty() && !coeff.is_zero())
      throw ParseError("constant term without a monomial", c.i);
    e.add_term(coeff, m);
    first = false;
  }
  return e;
}

std::string ConstantExpr::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [c, m] : terms_) {
    Rational a = c.abs();
    if (first) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    out += a.to_string();
    for (const auto& [name, pow] : m.powers) {
      out += "*";
      out += const_name_str(name);
      if (pow != 1) out += "^" + std::to_string(pow);
    }
    first = false;
  }
  return out;
}

}  // namespace tbbp
