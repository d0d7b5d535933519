#pragma once

#include <stdexcept>
#include <string>

namespace hopfkit
{

enum class Errc
{
  eps_overflow,
  mixed_truncation,
  not_divisible,
  singular_limit,
  non_nilpotent_argument,
  not_invertible,
  degree_cap_exceeded,
  fuel_exhausted,
  slot_mismatch,
  malformed_relation,
  parse_error,
  unknown_symbol,
  validation_error,
  unknown_name,
  no_hopf_data,
  not_closed,
  usage,
};

const char *errc_name(Errc code);

/// Every failure raised by the engine carries one of the codes above.
class Error : public std::runtime_error
{
public:
  Error(Errc code, const std::string &what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code)
  {
  }

  Errc code() const noexcept { return code_; }

  /// True for limits that the CLI maps to exit code 3.
  bool is_resource_limit() const noexcept
  {
    return code_ == Errc::fuel_exhausted || code_ == Errc::degree_cap_exceeded;
  }

private:
  Errc code_;
};

class ParseError : public Error
{
public:
  ParseError(const std::string &msg, int line, int column)
      : Error(Errc::parse_error, "line " + std::to_string(line) + ", column " +
                                     std::to_string(column) + ": " + msg),
        line_(line), column_(column)
  {
  }

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

private:
  int line_;
  int column_;
};

} // namespace hopfkit
