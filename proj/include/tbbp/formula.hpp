#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tbbp/rational.hpp"

namespace tbbp {

/// A BBP-type formula in P-notation:
///
///   value = scale * sum_{k>=0} base_b^-k sum_{j=1..n} a_j / (k*n + j)^s
///
/// Coefficients are stored verbatim as written; no common factor is extracted
/// automatically.
struct BbpFormula {
  Rational scale{1};
  int degree_s{1};
  mpz_class base_b{2};
  int length_n{1};
  std::vector<mpz_class> coeffs{mpz_class(1)};

  bool operator==(const BbpFormula& o) const {
    return scale == o.scale && degree_s == o.degree_s && base_b == o.base_b &&
           length_n == o.length_n && coeffs == o.coeffs;
  }
  bool same_shape(const BbpFormula& o) const {
    return degree_s == o.degree_s && base_b == o.base_b && length_n == o.length_n;
  }
};

/// Throws DomainError unless the structural invariants hold
/// (|b| >= 2, s >= 1, n >= 1, coefficient count = n).
void validate_formula(const BbpFormula& f);

/// Parses text of the form `[scale] P((s,b,n,(a1,...,an)))`.
///
/// scale    := product ["/" product]
/// product  := factor {"*" factor}
/// factor   := ["-"] uint ["^" uint]
///
/// s, b, n and the coefficients all accept the signed product grammar, so
/// `1/2*3^5 P((1,3^6,12,(3^5,...)))` parses with every factor evaluated
/// exactly. Whitespace is insignificant. Throws ParseError with the offending
/// position.
BbpFormula parse_formula(std::string_view text);

/// Canonical text: scale as reduced "num/den" (omitted when 1), all other
/// numbers as plain signed integers. parse_formula(print_formula(f)) == f.
std::string print_formula(const BbpFormula& f);

/// The exact per-term weights scale*a_j. Two formulas of the same
/// (s, b, n) are the same series iff these sequences are equal.
std::vector<Rational> term_weights(const BbpFormula& f);

/// Exact linear combination sum_i w_i * F_i of formulas sharing one shape.
/// The common denominator is folded into the output scale and the content
/// (gcd) of the resulting coefficient vector is extracted into the scale.
/// Throws ShapeError for mixed shapes.
BbpFormula combine(const std::vector<std::pair<Rational, BbpFormula>>& parts);

/// Rewrites f in base b^block with length n*block; the coefficient at
/// position j + n*r is a_j * b^(block-1-r) before normalization. The value is
/// preserved exactly.
BbpFormula rescale(const BbpFormula& f, int block);

/// Index dilation: length n*factor with the same base; slot j moves to
/// j*factor and factor^s is folded into the scale. Value preserved exactly.
BbpFormula dilate(const BbpFormula& f, int factor);

/// When base_b = beta^2 > 0, n is even and a_j = -beta * a_{j+n/2} for all j,
/// returns the equivalent alternating formula with base -beta and length n/2.
std::optional<BbpFormula> try_compress(const BbpFormula& f);

}  // namespace tbbp
