#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tbbp/constant_expr.hpp"
#include "tbbp/formula.hpp"

namespace tbbp {

enum class EntryKind { formula, zero_relation, table };

enum class LiPart { re, im };

/// Where a stored expansion table comes from:
///   value(rhs) = weight * part(Li_s(p e^{ix})) [ / sqrt3 ]
/// with modulus p = 1/sqrt(mod_q) and angle x = pi*angle_num/angle_den.
struct LiProvenance {
  int degree_s = 1;
  int mod_q = 3;  // 3 -> 1/sqrt3, 9 -> 1/3
  int angle_num = 0;
  int angle_den = 1;
  LiPart part = LiPart::re;
  Rational weight{1};
  bool over_sqrt3 = false;

  bool operator==(const LiProvenance& o) const {
    return degree_s == o.degree_s && mod_q == o.mod_q && angle_num == o.angle_num &&
           angle_den == o.angle_den && part == o.part && weight == o.weight &&
           over_sqrt3 == o.over_sqrt3;
  }
};

/// One named catalog record pairing a constant expression with a formula.
/// kind == zero_relation iff lhs is the empty expression; entries whose exact
/// constant side is not expressible over the 8-name alphabet carry only the
/// polylogarithm provenance and have kind == table.
struct CatalogEntry {
  std::string name;
  EntryKind kind = EntryKind::formula;
  ConstantExpr lhs;
  std::optional<LiProvenance> li;
  BbpFormula rhs;
  std::string citation;

  bool operator==(const CatalogEntry& o) const {
    return name == o.name && kind == o.kind && lhs == o.lhs && li == o.li &&
           rhs == o.rhs && citation == o.citation;
  }
};

/// Parses the line-oriented catalog format: blank-line separated records of
///   name = <identifier>
///   li   = [<rational> *] re|im(<s>, 1/sqrt3|1/3, 0|pi|pi/2|pi/6) [/ sqrt3]
///   lhs  = <constant expression> | 0
///   rhs  = <P-notation>
///   cite = <reference tag>
/// `li` is optional; `lhs` may be omitted only when `li` is present.
/// Parse failures name the record and line.
std::vector<CatalogEntry> parse_catalog(std::istream& in);
std::vector<CatalogEntry> load_catalog(const std::string& path);
void save_catalog(std::ostream& out, const std::vector<CatalogEntry>& entries);

/// The catalog compiled into the library.
const std::vector<CatalogEntry>& builtin_catalog();

/// Entry lookup by exact name, or by unique prefix. Throws Error listing the
/// available names when the lookup fails or is ambiguous.
const CatalogEntry& find_entry(const std::vector<CatalogEntry>& entries,
                               const std::string& name);

}  // namespace tbbp
