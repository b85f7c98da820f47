#pragma once
// Text grammar for graded Lie polynomials.
//
//   poly   := ['+'|'-'] term (('+'|'-') term)*
//   term   := [coeff '*'] elem
//   coeff  := int ['/' int]
//   elem   := var | '[' elem (',' elem)+ ']'     (k >= 3 children: left-normed)
//   var    := 'x' index ':' degree
//   degree := int | '(' int ',' int ')'
//
// Whitespace is insignificant. Degrees must all match the expected grading;
// a repeated variable index inside one term violates multilinearity and one
// index bound to two different degrees is inconsistent. All such problems
// raise ParseError with the offending byte position.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "grlie/degree.hpp"
#include "grlie/freelie.hpp"
#include "grlie/scalar.hpp"

namespace grlie {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t pos, const std::string& what)
      : std::runtime_error("parse error at " + std::to_string(pos) + ": " + what), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

/// Parses a polynomial; coefficients land in `field`, degrees in `grading`.
std::vector<Term> parse_poly(const std::string& text, const FieldSpec& field,
                             const GradingSpec& grading);

/// Canonical text form; parse(print_poly(t)) reproduces t.
std::string print_poly(const std::vector<Term>& terms);

/// Comma-separated integer tuple, e.g. "-1,1,1,1".
std::vector<std::int64_t> parse_tuple(const std::string& text);

/// Comma-separated degree list in either form: "0,1,2" or "(1,0),(0,1)".
std::vector<Degree> parse_degrees(const std::string& text, const GradingSpec& grading);

}  // namespace grlie
