#pragma once

// Text format for spherical codes:
//
//   scdt-code v1
//   label <text>
//   dim <n>
//   size <N>
//   kind gram | coords <norm2-rational>
//   <N rows of N (gram) or n (coords) field literals>
//
// Lines starting with '#' and blank lines are ignored. Row entries are
// separated by whitespace. A literal may contain spaces around a binary
// operator written as a standalone token ("1/5 + 2*sqrt(5)"), while a sign
// glued to its operand ("1/5 -1/5") starts a new entry.

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "scdt/code.hpp"

namespace scdt {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Parses and validates. Throws ParseError (syntax) or CodeError
/// (invariants).
SphericalCode parse_code(std::string_view text);
SphericalCode load_code(const std::filesystem::path& path);

/// Coordinates when the code carries them, otherwise the Gram matrix.
std::string emit_code(const SphericalCode& code);
void write_code(const SphericalCode& code, const std::filesystem::path& path);

}  // namespace scdt
