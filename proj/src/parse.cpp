#include "grlie/parse.hpp"

#include <cctype>
#include <cstdlib>
#include <map>
#include <utility>

namespace grlie {
namespace {

bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

struct Parser {
  const std::string& text;
  FieldSpec field;
  GradingSpec grading;
  std::size_t pos = 0;
  // Degree each variable index is bound to, with the position of first use;
  // one index bound to two degrees anywhere in the polynomial is an error.
  std::map<int, std::pair<Degree, std::size_t>> bound = {};

  [[noreturn]] void fail(std::size_t at, const std::string& msg) { throw ParseError(at, msg); }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos;
    return true;
  }
  void expect(char c, const std::string& where) {
    if (!accept(c)) fail(pos, std::string("expected '") + c + "' " + where);
  }

  std::int64_t integer(const std::string& what) {
    skip_ws();
    std::size_t at = pos;
    bool neg = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
      neg = text[pos] == '-';
      ++pos;
    }
    if (pos >= text.size() || !digit(text[pos])) fail(at, "expected integer " + what);
    std::int64_t v = 0;
    while (pos < text.size() && digit(text[pos])) v = v * 10 + (text[pos++] - '0');
    return neg ? -v : v;
  }

  Degree degree() {
    std::size_t at = pos;
    if (accept('(')) {
      if (grading.rank() != 2)
        fail(at, "pair degree under grading " + grading.to_string());
      std::int64_t i = integer("in pair degree");
      expect(',', "in pair degree");
      std::int64_t j = integer("in pair degree");
      expect(')', "after pair degree");
      return Degree::zq(i, j, grading.moduli[0]);
    }
    if (grading != GradingSpec::z())
      fail(at, "integer degree under grading " + grading.to_string());
    return Degree::z(integer("as degree"));
  }

  BracketExpr elem(std::map<int, std::size_t>& seen) {
    std::size_t at = pos;
    if (accept('[')) {
      std::vector<BracketExpr> kids;
      kids.push_back(elem(seen));
      expect(',', "inside bracket");
      kids.push_back(elem(seen));
      while (accept(',')) kids.push_back(elem(seen));
      expect(']', "after bracket");
      return BracketExpr::bracket(std::move(kids));
    }
    if (accept('x')) {
      std::int64_t idx = integer("as variable index");
      if (idx <= 0) fail(at, "variable index must be positive");
      expect(':', "after variable index");
      Degree d = degree();
      if (!seen.emplace(static_cast<int>(idx), at).second)
        fail(at, "variable x" + std::to_string(idx) + " repeated in a term");
      auto [it, fresh] = bound.emplace(static_cast<int>(idx), std::make_pair(d, at));
      if (!fresh && it->second.first != d)
        fail(at, "variable x" + std::to_string(idx) + " has degree " + d.to_string() +
                     " here but " + it->second.first.to_string() + " at position " +
                     std::to_string(it->second.second));
      return BracketExpr::var(Variable{static_cast<int>(idx), d});
    }
    fail(at, "expected a variable or '['");
  }

  Term term(bool negative, std::map<int, std::size_t>& seen) {
    Scalar coeff = Scalar::one(field);
    if (digit(peek())) {
      std::size_t at = pos;
      std::int64_t num = integer("as coefficient");
      std::int64_t den = 1;
      if (accept('/')) {
        den = integer("as denominator");
        if (den == 0) fail(at, "zero denominator");
      }
      expect('*', "after coefficient");
      coeff = Scalar::from_fraction(field, mpq_class(num, den));
    }
    BracketExpr e = elem(seen);
    if (negative) coeff = -coeff;
    return Term{coeff, std::move(e)};
  }

  std::vector<Term> poly() {
    std::vector<Term> out;
    bool neg = accept('-');
    if (!neg) accept('+');
    std::map<int, std::size_t> first_seen;
    out.push_back(term(neg, first_seen));
    while (peek() != '\0') {
      std::size_t at = pos;
      if (accept('-'))
        neg = true;
      else if (accept('+'))
        neg = false;
      else
        fail(at, "expected '+' or '-' between terms");
      peek();
      std::size_t term_at = pos;
      std::map<int, std::size_t> seen;
      out.push_back(term(neg, seen));
      // Multilinear sums need every term on the same variable set.
      auto same = [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return false;
        auto ia = a.begin();
        for (auto ib = b.begin(); ib != b.end(); ++ia, ++ib)
          if (ia->first != ib->first) return false;
        return true;
      };
      if (!same(first_seen, seen))
        fail(term_at, "term covers a different variable set than the first term");
    }
    return out;
  }
};

std::string coeff_prefix(const Scalar& c, bool leading, std::string* sep) {
  // Returns the coefficient chunk ("", "2*", "3/2*"); fills the separator
  // (" + ", " - ", or "-" for a leading negative).
  std::string mag;
  bool neg = false;
  switch (c.field().kind()) {
    case FieldSpec::Kind::rational: {
      mpq_class v = c.rational_value();
      neg = v < 0;
      mpq_class a = abs(v);
      if (a != 1) mag = a.get_str() + "*";
      break;
    }
    case FieldSpec::Kind::prime: {
      // Residues are canonical in [0, p); no '-' ever appears.
      if (c.residue() != 1) mag = std::to_string(c.residue()) + "*";
      break;
    }
    case FieldSpec::Kind::cyclotomic: {
      const auto& coords = c.cyclotomic_coords();
      bool constant = true;
      for (std::size_t i = 1; i < coords.size(); ++i) constant &= coords[i] == 0;
      if (!constant) {
        // No grammar form exists; printed for humans, does not re-parse.
        mag = "(" + c.to_string() + ")*";
        break;
      }
      neg = coords[0] < 0;
      mpq_class a = abs(coords[0]);
      if (a != 1) mag = a.get_str() + "*";
      break;
    }
  }
  if (leading)
    *sep = neg ? "-" : "";
  else
    *sep = neg ? " - " : " + ";
  return mag;
}

std::string print_expr(const BracketExpr& e) {
  if (e.is_var()) {
    const Variable& v = e.variable();
    return "x" + std::to_string(v.index) + ":" + v.degree.to_string();
  }
  std::string s = "[";
  bool first = true;
  for (const auto& k : e.children()) {
    if (!first) s += ",";
    first = false;
    s += print_expr(k);
  }
  return s + "]";
}

}  // namespace

std::vector<Term> parse_poly(const std::string& text, const FieldSpec& field,
                             const GradingSpec& grading) {
  Parser p{text, field, grading};
  if (p.peek() == '\0') throw ParseError(0, "empty polynomial");
  return p.poly();
}

std::string print_poly(const std::vector<Term>& terms) {
  std::string out;
  bool leading = true;
  for (const auto& t : terms) {
    if (t.coeff.is_zero()) continue;
    std::string sep;
    std::string mag = coeff_prefix(t.coeff, leading, &sep);
    out += sep + mag + print_expr(t.expr);
    leading = false;
  }
  if (leading) out = "0";
  return out;
}

std::vector<std::int64_t> parse_tuple(const std::string& text) {
  Parser p{text, FieldSpec::rational(), GradingSpec::z()};
  std::vector<std::int64_t> out;
  out.push_back(p.integer("as tuple entry"));
  while (p.accept(',')) out.push_back(p.integer("as tuple entry"));
  if (p.peek() != '\0') p.fail(p.pos, "trailing input after tuple");
  return out;
}

std::vector<Degree> parse_degrees(const std::string& text, const GradingSpec& grading) {
  Parser p{text, FieldSpec::rational(), grading};
  std::vector<Degree> out;
  out.push_back(p.degree());
  while (p.accept(',')) out.push_back(p.degree());
  if (p.peek() != '\0') p.fail(p.pos, "trailing input after degree list");
  return out;
}

}  // namespace grlie
