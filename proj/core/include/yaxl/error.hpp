#pragma once

#include <stdexcept>
#include <string>

namespace yaxl {

  // Base of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Malformed or inconsistent input: bad entries, size mismatch, parse errors.
  class InputError : public Error {
   public:
    using Error::Error;
  };

  // An operation was called on a value outside its domain.
  class PreconditionError : public Error {
   public:
    using Error::Error;
  };

  // An identity that is guaranteed by theory failed on concrete data.
  class InternalError : public Error {
   public:
    using Error::Error;
  };

  // Parse failure with a 1-based source position.
  class ParseError : public InputError {
   public:
    ParseError(std::string const& what, std::size_t line, std::size_t column)
        : InputError(std::to_string(line) + ":" + std::to_string(column) + ": "
                     + what),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

   private:
    std::size_t line_;
    std::size_t column_;
  };

}  // namespace yaxl
