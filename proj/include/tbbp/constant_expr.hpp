#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tbbp/rational.hpp"

namespace tbbp {

/// The fixed alphabet of named constants appearing on formula left-hand sides.
enum class ConstName { pi, ln2, ln3, zeta3, zeta5, cl2_pi3, cl4_pi3, sqrt3 };

inline constexpr std::array<ConstName, 8> kAllConstNames = {
    ConstName::pi,     ConstName::ln2,     ConstName::ln3,     ConstName::zeta3,
    ConstName::zeta5,  ConstName::cl2_pi3, ConstName::cl4_pi3, ConstName::sqrt3};

const char* const_name_str(ConstName c);
std::optional<ConstName> const_name_parse(std::string_view s);

/// Product of named constants raised to positive integer powers.
struct Monomial {
  std::map<ConstName, int> powers;
  bool operator==(const Monomial& o) const { return powers == o.powers; }
  bool operator<(const Monomial& o) const { return powers < o.powers; }
};

/// Exact linear combination of monomials, e.g. 13 zeta3 - pi^2 ln3 + ln3^3.
/// Terms are kept merged, sorted and free of zero coefficients, so equality
/// of canonical forms is value equality over the monomial basis.
class ConstantExpr {
public:
  ConstantExpr() = default;

  static ConstantExpr term(const Rational& coeff, Monomial m);
  ConstantExpr operator+(const ConstantExpr& o) const;
  ConstantExpr operator-(const ConstantExpr& o) const;
  ConstantExpr scaled(const Rational& c) const;

  bool is_zero() const { return terms_.empty(); }
  const std::vector<std::pair<Rational, Monomial>>& terms() const { return terms_; }
  bool operator==(const ConstantExpr& o) const { return terms_ == o.terms_; }

  /// Signed sum of `rational ["*" name ["^" uint]]...` products, e.g.
  /// "13*zeta3 - 1*pi^2*ln3 + 1*ln3^3". "0" denotes the empty expression.
  static ConstantExpr parse(std::string_view text);
  std::string to_string() const;

private:
  void add_term(const Rational& coeff, const Monomial& m);
  std::vector<std::pair<Rational, Monomial>> terms_;
};

}  // namespace tbbp
