#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bihom {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Operand shapes do not fit (matrix sizes, element lengths, group signatures).
class DimensionError : public Error {
   public:
    using Error::Error;
};

/// A matrix that had to be inverted is singular.
class SingularMatrixError : public Error {
   public:
    using Error::Error;
};

/// A hypothesis of a construction was checked and does not hold.
class ValidationError : public Error {
   public:
    using Error::Error;
};

/// A lookup outside a finite table or a name outside a fixed vocabulary.
class LookupError : public Error {
   public:
    using Error::Error;
};

class ParseError : public Error {
   public:
    ParseError(std::size_t line, const std::string& what)
        : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

    /// 1-based line number, 0 when the error is not tied to a line.
    std::size_t line() const noexcept { return line_; }

   private:
    std::size_t line_;
};

}  // namespace bihom
