#pragma once

#include "partcat/linalg.hpp"
#include "partcat/ops.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace partcat {

struct ParseError : std::invalid_argument {
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " (at column " + std::to_string(position + 1) + ")"), pos(position) {}
  std::size_t pos;
};

// Symbols a coefficient may mention besides d/delta. Empty = anything goes
// (new names get registered).
struct SymbolScope {
  std::vector<std::string> declared;
  bool strict = false;
};

// integers, symbols, + - * / ^, parentheses
Coeff parseCoeff(std::string_view text, const SymbolScope& scope = {});

// expression := term (('+'|'-') term)*, term := [coeff '*'] word.
// word is [a-z]+, "upper|lower" for two-row partitions, or "()" for the empty one.
LinComb<Coeff> parseLinComb(std::string_view text, const SymbolScope& scope = {});

struct GeneratorSpec {
  std::vector<std::string> params;
  std::optional<Rational> delta;
  std::vector<LinComb<Coeff>> generators;
  std::vector<std::string> sources;  // the line each generator came from
};

// Lines: "params: a, b1", "delta: 7", '#' comments, one expression per line.
GeneratorSpec parseGeneratorFile(std::string_view text);

// "vertices K; edge v.l-v.l; ...; free v.l,v.l" with 1-based numbers;
// ';' or newlines separate statements.
ContractionPlan parsePlan(std::string_view text);

}  // namespace partcat
