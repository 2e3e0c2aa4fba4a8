#include "tbbp/catalog.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "tbbp/errors.hpp"

namespace tbbp {

extern const char* const kBuiltinCatalogText;

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

LiProvenance parse_li(const std::string& text) {
  // [rational *] re|im ( s , 1/sqrt3|1/3 , angle ) [/ sqrt3]
  LiProvenance li;
  std::string s = text;
  std::size_t part_at = s.find("re(");
  LiPart part = LiPart::re;
  if (part_at == std::string::npos) {
    part_at = s.find("im(");
    part = LiPart::im;
  }
  if (part_at == std::string::npos) throw Error("li needs re(...) or im(...)");
  li.part = part;

  std::string head = trim(s.substr(0, part_at));
  if (!head.empty()) {
    if (head.back() != '*') throw Error("li weight must be followed by '*'");
    std::string w = trim(head.substr(0, head.size() - 1));
    std::size_t slash = w.find('/');
    if (slash == std::string::npos)
      li.weight = Rational(mpz_class(w), 1);
    else
      li.weight = Rational(mpz_class(w.substr(0, slash)), mpz_class(w.substr(slash + 1)));
  }

  std::size_t open = part_at + 2;
  std::size_t close = s.find(')', open);
  if (close == std::string::npos) throw Error("li missing ')'");
  std::string args = s.substr(open + 1, close - open - 1);
  std::string tail = trim(s.substr(close + 1));
  if (!tail.empty()) {
    if (trim(tail) != "/ sqrt3" && trim(tail) != "/sqrt3")
      throw Error("unexpected text after li part: '" + tail + "'");
    li.over_sqrt3 = true;
  }

  std::stringstream as(args);
  std::string f1, f2, f3;
  if (!std::getline(as, f1, ',') || !std::getline(as, f2, ',') || !std::getline(as, f3))
    throw Error("li needs (degree, modulus, angle)");
  li.degree_s = std::stoi(trim(f1));
  std::string mod = trim(f2);
  if (mod == "1/sqrt3")
    li.mod_q = 3;
  else if (mod == "1/3")
    li.mod_q = 9;
  else
    throw Error("li modulus must be 1/sqrt3 or 1/3");
  std::string ang = trim(f3);
  if (ang == "0") {
    li.angle_num = 0;
    li.angle_den = 1;
  } else if (ang == "pi") {
    li.angle_num = 1;
    li.angle_den = 1;
  } else if (ang == "pi/2") {
    li.angle_num = 1;
    li.angle_den = 2;
  } else if (ang == "pi/6") {
    li.angle_num = 1;
    li.angle_den = 6;
  } else {
    throw Error("li angle must be one of 0, pi, pi/2, pi/6");
  }
  return li;
}

std::string li_to_string(const LiProvenance& li) {
  std::string out;
  if (!(li.weight == Rational(1))) out += li.weight.to_string() + " * ";
  out += li.part == LiPart::re ? "re(" : "im(";
  out += std::to_string(li.degree_s) + ", ";
  out += li.mod_q == 3 ? "1/sqrt3" : "1/3";
  out += ", ";
  if (li.angle_num == 0)
    out += "0";
  else if (li.angle_den == 1)
    out += "pi";
  else
    out += "pi/" + std::to_string(li.angle_den);
  out += ")";
  if (li.over_sqrt3) out += " / sqrt3";
  return out;
}

}  // namespace

std::vector<CatalogEntry> parse_catalog(std::istream& in) {
  std::vector<CatalogEntry> entries;
  std::string line;
  long lineno = 0;

  std::string name, lhs, rhs, cite, li;
  bool has_lhs = false, has_rhs = false, has_li = false;
  long record_line = 0;

  auto flush = [&]() {
    if (name.empty() && !has_lhs && !has_rhs) return;
    auto fail = [&](const std::string& why) {
      throw Error("catalog record '" + (name.empty() ? "?" : name) + "' (line " +
                  std::to_string(record_line) + "): " + why);
    };
    if (name.empty()) fail("missing name");
    if (!has_rhs) fail("missing rhs");
    if (!has_lhs && !has_li) fail("needs lhs or li");
    CatalogEntry e;
    e.name = name;
    try {
      e.rhs = parse_formula(rhs);
      validate_formula(e.rhs);
      if (has_li) e.li = parse_li(li);
      if (has_lhs) {
        e.lhs = ConstantExpr::parse(lhs);
        e.kind = e.lhs.is_zero() ? EntryKind::zero_relation : EntryKind::formula;
      } else {
        e.kind = EntryKind::table;
      }
    } catch (const std::exception& ex) {
      fail(ex.what());
    }
    e.citation = cite;
    entries.push_back(std::move(e));
    name.clear();
    lhs.clear();
    rhs.clear();
    cite.clear();
    li.clear();
    has_lhs = has_rhs = has_li = false;
  };

  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty()) {
      flush();
      continue;
    }
    if (t[0] == '#') continue;
    std::size_t eq = t.find('=');
    if (eq == std::string::npos)
      throw Error("catalog line " + std::to_string(lineno) + ": expected 'key = value'");
    std::string key = trim(t.substr(0, eq));
    std::string val = trim(t.substr(eq + 1));
    if (name.empty() && !has_lhs && !has_rhs) record_line = lineno;
    if (key == "name")
      name = val;
    else if (key == "lhs") {
      lhs = val;
      has_lhs = true;
    } else if (key == "rhs") {
      rhs = val;
      has_rhs = true;
    } else if (key == "cite")
      cite = val;
    else if (key == "li") {
      li = val;
      has_li = true;
    } else
      throw Error("catalog line " + std::to_string(lineno) + ": unknown key '" + key +
                  "'");
  }
  flush();
  return entries;
}

std::vector<CatalogEntry> load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open catalog file: " + path);
  return parse_catalog(in);
}

void save_catalog(std::ostream& out, const std::vector<CatalogEntry>& entries) {
  bool first = true;
  for (const auto& e : entries) {
    if (!first) out << "\n";
    first = false;
    out << "name = " << e.name << "\n";
    if (e.li) out << "li = " << li_to_string(*e.li) << "\n";
    if (e.kind != EntryKind::table) out << "lhs = " << e.lhs.to_string() << "\n";
    out << "rhs = " << print_formula(e.rhs) << "\n";
    out << "cite = " << e.citation << "\n";
  }
}

const std::vector<CatalogEntry>& builtin_catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    std::istringstream in(kBuiltinCatalogText);
    return parse_catalog(in);
  }();
  return entries;
}

const CatalogEntry& find_entry(const std::vector<CatalogEntry>& entries,
                               const std::string& name) {
  const CatalogEntry* prefix_hit = nullptr;
  int prefix_count = 0;
  for (const auto& e : entries) {
    if (e.name == name) return e;
    if (e.name.rfind(name, 0) == 0) {
      prefix_hit = &e;
      ++prefix_count;
    }
  }
  if (prefix_count == 1) return *prefix_hit;
  std::string names;
  for (const auto& e : entries) {
    if (!names.empty()) names += ", ";
    names += e.name;
  }
  throw Error((prefix_count > 1 ? "ambiguous entry name '" : "unknown entry '") + name +
              "'; available: " + names);
}

}  // namespace tbbp
