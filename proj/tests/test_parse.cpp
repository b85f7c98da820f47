#include <doctest.h>

#include <string>

#include "grlie/parse.hpp"

using namespace grlie;

namespace {

const FieldSpec Q = FieldSpec::rational();
const GradingSpec Z = GradingSpec::z();

std::string roundtrip(const std::string& s, const FieldSpec& f = Q, const GradingSpec& g = Z) {
  return print_poly(parse_poly(s, f, g));
}

// Position and message of the ParseError raised by the input.
std::pair<std::size_t, std::string> error_of(const std::string& s, const FieldSpec& f = Q,
                                             const GradingSpec& g = Z) {
  try {
    parse_poly(s, f, g);
  } catch (const ParseError& e) {
    return {e.position(), e.what()};
  }
  FAIL("expected ParseError for: " << s);
  return {0, ""};
}

}  // namespace

TEST_CASE("printing is a fixed point of parsing") {
  for (const std::string& s : {
           "[x1:1, x2:2]",
           "-2*[x1:0,x2:1,x3:2] - [x1:0,x3:2,x2:1]",
           "3/2*[x1:1,x2:1] - [x2:1,x1:1]",
           "x1:-4",
           " [ x1 : 1 , [ x2 : 2 , x3 : 3 ] ] ",
       }) {
    std::string p1 = roundtrip(s);
    CHECK(roundtrip(p1) == p1);
  }
  CHECK(roundtrip("[x1:1, x2:2]") == "[x1:1,x2:2]");
  CHECK(roundtrip("-2*[x1:0,x2:1,x3:2] - [x1:0,x3:2,x2:1]") ==
        "-2*[x1:0,x2:1,x3:2] - [x1:0,x3:2,x2:1]");
  CHECK(roundtrip("+1*x1:7") == "x1:7");

  GradingSpec g2 = GradingSpec::zq2(2);
  std::string pauli = "[x1:(1,0),[x2:(0,1),x3:(1,1)]]";
  CHECK(roundtrip(pauli, Q, g2) == pauli);
}

TEST_CASE("prime-field coefficients print as canonical residues") {
  FieldSpec F5 = FieldSpec::prime(5);
  CHECK(roundtrip("4*[x1:1,x2:1] - 3*[x2:1,x1:1]", F5) == "4*[x1:1,x2:1] + 2*[x2:1,x1:1]");
  CHECK(roundtrip("5*x1:1 + x1:1", F5) == "x1:1");  // 5 = 0 drops, then 1 elides
}

TEST_CASE("cyclotomic coefficients") {
  FieldSpec C3 = FieldSpec::cyclotomic(3);
  GradingSpec g3 = GradingSpec::zq2(3);
  std::string s = "2*[x1:(1,0),x2:(0,1)]";
  CHECK(roundtrip(s, C3, g3) == s);
  // A non-constant coefficient has no grammar form; the display is explicit.
  Term t{Scalar::cyclotomic_eps(C3), parse_poly("[x1:(1,0),x2:(0,1)]", C3, g3)[0].expr};
  CHECK(print_poly({t}) == "(e)*[x1:(1,0),x2:(0,1)]");
}

TEST_CASE("print_poly drops zero terms") {
  std::vector<Term> terms = parse_poly("x1:3", Q, Z);
  terms[0].coeff = Scalar::zero(Q);
  CHECK(print_poly(terms) == "0");
}

TEST_CASE("parse errors carry positions") {
  auto [p1, m1] = error_of("[x1:1,x1:2]");
  CHECK(p1 == 6);
  CHECK(m1 == std::string("parse error at 6: variable x1 repeated in a term"));

  auto [p2, m2] = error_of("[x1:1,x2:1] + [x2:2,x3:1]");
  CHECK(p2 == 15);
  CHECK(m2 == std::string("parse error at 15: variable x2 has degree 2 here but 1 at position 6"));

  auto [p3, m3] = error_of("[x1:1,x2:1] + x3:2");
  CHECK(p3 == 14);
  CHECK(m3 ==
        std::string("parse error at 14: term covers a different variable set than the first term"));

  CHECK(error_of("[x1:1]").first == 5);          // brackets need >= 2 children
  CHECK(error_of("[x1:1,x2:3").first == 10);     // unclosed bracket
  CHECK(error_of("2 [x1:1,x2:1]").first == 2);   // missing '*'
  CHECK(error_of("").first == 0);
  CHECK(error_of("   ").first == 0);
  CHECK(error_of("[x1:1,x2:1] x3:2").first == 12);  // missing '+'/'-'
  CHECK(error_of("1/0*x1:1").first == 0);           // zero denominator
  CHECK(error_of("x0:1").first == 0);               // indices start at 1

  auto [p4, m4] = error_of("[x1:(1,0),x2:(0,1)]");  // pair degree needs a Z_q x Z_q grading
  CHECK(p4 == 4);
  CHECK(std::string(m4).find("pair degree under grading (Z)") != std::string::npos);
  CHECK(error_of("[x1:1,x2:(0,1)]", Q, GradingSpec::zq2(2)).first == 4);
}

TEST_CASE("tuple and degree-list parsing") {
  CHECK(parse_tuple("-1, 1,1,1") == std::vector<std::int64_t>{-1, 1, 1, 1});
  CHECK(parse_tuple("7") == std::vector<std::int64_t>{7});
  CHECK_THROWS_AS(parse_tuple(""), ParseError);
  CHECK_THROWS_AS(parse_tuple("1,2 x"), ParseError);

  CHECK(parse_degrees("0, 1 ,2", Z) ==
        std::vector<Degree>{Degree::z(0), Degree::z(1), Degree::z(2)});
  CHECK(parse_degrees("(1,0),(0,1)", GradingSpec::zq2(3)) ==
        std::vector<Degree>{Degree::zq(1, 0, 3), Degree::zq(0, 1, 3)});
  CHECK_THROWS_AS(parse_degrees("(1,0)", Z), ParseError);
}
