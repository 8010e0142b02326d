#ifndef GAUT_ERROR_HPP
#define GAUT_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gaut {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class RankMismatch : public Error {
public:
  using Error::Error;
};

/// Malformed textual input. `line` and `column` are 1-based; 0 when unknown.
class SyntaxError : public Error {
public:
  SyntaxError(const std::string& what, std::size_t line, std::size_t column)
      : Error(format(what, line, column)), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  static std::string format(const std::string& what, std::size_t line, std::size_t column) {
    if (line == 0)
      return what;
    return std::to_string(line) + ":" + std::to_string(column) + ": " + what;
  }

  std::size_t line_;
  std::size_t column_;
};

class InvalidPermutation : public Error {
public:
  using Error::Error;
};

class UnknownSymbol : public Error {
public:
  using Error::Error;
};

class BudgetExceeded : public Error {
public:
  using Error::Error;
};

class EmptyStateSet : public Error {
public:
  using Error::Error;
};

class InvalidK : public Error {
public:
  using Error::Error;
};

class IncompleteColoring : public Error {
public:
  using Error::Error;
};

} // namespace gaut

#endif
