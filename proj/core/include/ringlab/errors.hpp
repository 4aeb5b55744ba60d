#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ringlab {

enum class errc {
  invalid_tables,
  order_bound_exceeded,
  ideal_bound_exceeded,
  oracle_bound_exceeded,
  unknown_catalog_name,
  parse_error,
  format_error,
  improper_ideal,
  not_multiplicative,
  not_ore,
  not_denominator,
  zero_absorbed,
  precond_ass_not_nested,
  unknown_theorem,
  invariant_failure,
};

class Error : public std::runtime_error {
 public:
  Error(errc code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

/// Raised by the expression parser; offset is 1-based into the source text.
class ParseError : public Error {
 public:
  ParseError(int offset, std::vector<std::string> expected, std::string message)
      : Error(errc::parse_error, std::move(message)),
        offset(offset),
        expected(std::move(expected)) {}
  int offset;
  std::vector<std::string> expected;
};

/// Raised by the table-file reader; line is 1-based (0 = file level).
class FormatError : public Error {
 public:
  FormatError(int line, std::string message)
      : Error(errc::format_error, std::move(message)), line(line) {}
  int line;
};

}  // namespace ringlab
