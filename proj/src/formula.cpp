#include "tbbp/formula.hpp"

#include <cctype>

#include "tbbp/errors.hpp"

namespace tbbp {

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
  void expect(char c) {
    if (!accept(c))
      throw ParseError(std::string("expected '") + c + "'", i);
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

mpz_class parse_factor(Cursor& c) {
  bool neg = c.accept('-');
  mpz_class v = parse_uint(c);
  if (c.accept('^')) {
    std::size_t at = c.i;
    mpz_class e = parse_uint(c);
    if (!e.fits_uint_p() || e.get_ui() > 4096)
      throw ParseError("exponent out of range", at);
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), v.get_mpz_t(), e.get_ui());
    v = r;
  }
  return neg ? mpz_class(-v) : v;
}

mpz_class parse_product(Cursor& c) {
  mpz_class v = parse_factor(c);
  while (c.accept('*')) v *= parse_factor(c);
  return v;
}

long to_checked_long(const mpz_class& v, const char* what, std::size_t pos) {
  if (!v.fits_slong_p()) throw ParseError(std::string(what) + " out of range", pos);
  return v.get_si();
}

// Extracts the content (gcd, with the sign of the scale made positive) of the
// coefficient vector into the scale. The all-zero vector normalizes to
// coefficients 0 with scale 1.
BbpFormula normalized(BbpFormula f) {
  mpz_class g = 0;
  for (const auto& a : f.coeffs) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
  if (g == 0) {
    f.scale = Rational(1);
    return f;
  }
  if (f.scale.sign() < 0) g = -g;
  if (g != 1) {
    for (auto& a : f.coeffs) a /= g;
    f.scale = f.scale * Rational(g);
  }
  return f;
}

}  // namespace

void validate_formula(const BbpFormula& f) {
  if (f.degree_s < 1) throw DomainError("degree s must be >= 1");
  if (::abs(f.base_b) < 2) throw DomainError("|base| must be >= 2");
  if (f.length_n < 1) throw DomainError("length n must be >= 1");
  if (f.coeffs.size() != static_cast<std::size_t>(f.length_n))
    throw DomainError("coefficient count does not match length n");
}

BbpFormula parse_formula(std::string_view text) {
  Cursor c{text};
  BbpFormula f;
  f.scale = Rational(1);
  if (c.peek() != 'P') {
    std::size_t at = c.i;
    mpz_class num = parse_product(c);
    mpz_class den = 1;
    if (c.accept('/')) {
      den = parse_product(c);
      if (den == 0) throw ParseError("zero scale denominator", c.i);
    }
    (void)at;
    f.scale = Rational(num, den);
  }
  c.expect('P');
  c.expect('(');
  c.expect('(');

  std::size_t at = c.i;
  f.degree_s = static_cast<int>(to_checked_long(parse_product(c), "degree s", at));
  if (f.degree_s < 1) throw ParseError("degree s must be >= 1", at);
  c.expect(',');

  at = c.i;
  f.base_b = parse_product(c);
  if (::abs(f.base_b) < 2) throw ParseError("|base| must be >= 2", at);
  c.expect(',');

  at = c.i;
  long n = to_checked_long(parse_product(c), "length n", at);
  if (n < 1 || n > 1000000) throw ParseError("length n out of range", at);
  f.length_n = static_cast<int>(n);
  c.expect(',');
  c.expect('(');

  f.coeffs.clear();
  f.coeffs.push_back(parse_product(c));
  while (c.accept(',')) f.coeffs.push_back(parse_product(c));
  std::size_t close_at = c.i;
  c.expect(')');
  c.expect(')');
  c.expect(')');
  c.skip();
  if (c.i != text.size()) throw ParseError("trailing characters", c.i);

  if (f.coeffs.size() != static_cast<std::size_t>(f.length_n))
    throw ParseError("expected " + std::to_string(f.length_n) +
                         " coefficients, found " + std::to_string(f.coeffs.size()),
                     close_at);
  return f;
}

std::string print_formula(const BbpFormula& f) {
  std::string out;
  if (!(f.scale == Rational(1))) {
    out += f.scale.to_string();
    out += " ";
  }
  out += "P((" + std::to_string(f.degree_s) + "," + f.base_b.get_str() + "," +
         std::to_string(f.length_n) + ",(";
  for (int j = 0; j < f.length_n; ++j) {
    if (j) out += ",";
    out += f.coeffs[static_cast<std::size_t>(j)].get_str();
  }
  out += ")))";
  return out;
}

std::vector<Rational> term_weights(const BbpFormula& f) {
  std::vector<Rational> w;
  w.reserve(f.coeffs.size());
  for (const auto& a : f.coeffs) w.push_back(f.scale * Rational(a));
  return w;
}

BbpFormula combine(const std::vector<std::pair<Rational, BbpFormula>>& parts) {
  if (parts.empty()) throw ShapeError("combine of an empty list");
  const BbpFormula& first = parts.front().second;
  for (const auto& [w, f] : parts) {
    validate_formula(f);
    if (!f.same_shape(first))
      throw ShapeError("combine requires a common (degree, base, length) shape");
  }
  std::size_t n = static_cast<std::size_t>(first.length_n);
  std::vector<Rational> acc(n, Rational(0));
  for (const auto& [w, f] : parts)
    for (std::size_t j = 0; j < n; ++j) acc[j] += w * f.scale * Rational(f.coeffs[j]);

  mpz_class den = 1;
  for (const auto& c : acc) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.den().get_mpz_t());
  BbpFormula out;
  out.degree_s = first.degree_s;
  out.base_b = first.base_b;
  out.length_n = first.length_n;
  out.scale = Rational(mpz_class(1), den);
  out.coeffs.resize(n);
  for (std::size_t j = 0; j < n; ++j) out.coeffs[j] = acc[j].num() * (den / acc[j].den());
  return normalized(std::move(out));
}

BbpFormula rescale(const BbpFormula& f, int block) {
  validate_formula(f);
  if (block < 1) throw DomainError("rescale block must be >= 1");
  if (block == 1) return f;
  std::size_t n = static_cast<std::size_t>(f.length_n);
  BbpFormula out;
  out.degree_s = f.degree_s;
  mpz_class bp;
  mpz_pow_ui(bp.get_mpz_t(), f.base_b.get_mpz_t(), static_cast<unsigned long>(block));
  out.base_b = bp;
  out.length_n = f.length_n * block;
  out.coeffs.assign(static_cast<std::size_t>(out.length_n), mpz_class(0));
  // a'_{j + n r} = a_j * b^(block-1-r); the matching 1/b^(block-1) goes to the
  // scale so the value is unchanged.
  mpz_class pw = 1;
  for (int r = block - 1; r >= 0; --r) {
    for (std::size_t j = 0; j < n; ++j)
      out.coeffs[static_cast<std::size_t>(r) * n + j] = f.coeffs[j] * pw;
    pw *= f.base_b;
  }
  // pw is now b^block; we need scale / b^(block-1).
  mpz_class bpow;
  mpz_pow_ui(bpow.get_mpz_t(), f.base_b.get_mpz_t(), static_cast<unsigned long>(block - 1));
  out.scale = f.scale / Rational(bpow);
  return normalized(std::move(out));
}

BbpFormula dilate(const BbpFormula& f, int factor) {
  validate_formula(f);
  if (factor < 1) throw DomainError("dilate factor must be >= 1");
  if (factor == 1) return f;
  BbpFormula out;
  out.degree_s = f.degree_s;
  out.base_b = f.base_b;
  out.length_n = f.length_n * factor;
  out.coeffs.assign(static_cast<std::size_t>(out.length_n), mpz_class(0));
  for (int j = 1; j <= f.length_n; ++j)
    out.coeffs[static_cast<std::size_t>(j * factor) - 1] =
        f.coeffs[static_cast<std::size_t>(j) - 1];
  out.scale = f.scale * Rational(factor).pow(f.degree_s);
  return out;
}

std::optional<BbpFormula> try_compress(const BbpFormula& f) {
  validate_formula(f);
  if (f.length_n % 2 != 0 || f.base_b <= 0) return std::nullopt;
  mpz_class beta;
  if (mpz_perfect_square_p(f.base_b.get_mpz_t()) == 0) return std::nullopt;
  mpz_sqrt(beta.get_mpz_t(), f.base_b.get_mpz_t());
  if (beta < 2) return std::nullopt;
  std::size_t h = static_cast<std::size_t>(f.length_n) / 2;
  for (std::size_t j = 0; j < h; ++j)
    if (f.coeffs[j] != -beta * f.coeffs[j + h]) return std::nullopt;
  BbpFormula out;
  out.degree_s = f.degree_s;
  out.base_b = -beta;
  out.length_n = f.length_n / 2;
  out.coeffs.assign(f.coeffs.begin(), f.coeffs.begin() + static_cast<long>(h));
  out.scale = f.scale;
  return normalized(std::move(out));
}

}  // namespace tbbp
