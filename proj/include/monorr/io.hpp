#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "monorr/ideal.hpp"

namespace monorr {

/// An ideal as written by a user: named variables and generator terms.
/// Terms never hold zero exponents; the unit monomial is an empty term.
struct IdealSpec {
  std::vector<std::string> variables;
  std::vector<std::map<std::string, exponent_t>> generators;

  bool operator==(const IdealSpec&) const = default;
};

class parse_error : public std::runtime_error {
public:
  parse_error(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + what), line_(line),
        column_(column) {}

  /// 1-based position of the offending character.
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

/// Grammar (whitespace is insignificant):
///
///   input    := [ "vars" ":" name ("," name)* NEWLINE ] monomial ("," monomial)*
///   monomial := factor ("*" factor)*
///   factor   := name [ "^" integer ] | "1"
///
/// Without a vars header, variables are ordered by first appearance. With
/// one, names outside it are rejected. Repeated factors multiply.
IdealSpec parse_ideal(std::string_view text);

/// Inverse of parse_ideal, always emitting a vars header.
std::string serialize(const IdealSpec& spec);

MonomialIdeal to_ideal(const IdealSpec& spec);
/// Minimal generators of `spec`'s ideal, in canonical order, as a spec.
IdealSpec to_spec(const std::vector<std::string>& variables, const MonomialIdeal& I);

/// "x^3*y*z", or "1" for the unit monomial.
std::string format_monomial(const Monomial& m, const std::vector<std::string>& variables);
/// "<x^3, y^3, x*y>"; "<0>" for the zero ideal.
std::string format_ideal(const MonomialIdeal& I, const std::vector<std::string>& variables);

/// Parses a single monomial over a fixed variable list.
Monomial parse_monomial(std::string_view text, const std::vector<std::string>& variables);

} // namespace monorr
