#pragma once

// Curve file format (whitespace-insensitive, '#' starts a comment):
//
//   file   := line line                      one line for x, one for y
//   line   := ("x" | "y") "(t)" "=" expr
//   expr   := term (("+" | "-") term)*
//   term   := factor (("*" | "/") factor)*   "/" only by a nonzero constant
//   factor := ("-" | "+") factor | atom ("^" uint)?
//   atom   := rational | decimal | "sqrt" "(" uint ")" | "t" | "(" expr ")"
//   rational := int ("/" uint)?
//
// A literal directly followed by "t" or "(" multiplies it ("2t", "3(t+1)").
// Decimals are read exactly: 0.25 is 1/4, not a binary float.

#include "symcurve/curve.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace symcurve {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, int line, int column)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
          line_(line),
          column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// pi, e, sqrt of a non-integer or of a negative number, ...
class UnsupportedConstantError : public ParseError {
public:
    using ParseError::ParseError;
};

/// Expansion would exceed the configured degree cap.
class DegreeCapError : public ParseError {
public:
    using ParseError::ParseError;
};

struct ParseOptions {
    int degree_cap = 10000;
};

/// 10000 unless SYMCURVE_DEGREE_CAP holds a positive integer.
ParseOptions default_parse_options();

Parametrization parse_curve(std::string_view text, const ParseOptions& opts = default_parse_options());
RealPoly parse_expression(std::string_view text, const ParseOptions& opts = default_parse_options());
/// A constant expression such as "1/2 - 3*sqrt(2)".
FieldElement parse_field_element(std::string_view text);

/// Canonical expanded form; parse_curve(format_curve(p)) == p.
std::string format_curve(const Parametrization& p);

}  // namespace symcurve
