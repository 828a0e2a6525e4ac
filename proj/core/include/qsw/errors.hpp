#ifndef QSW_ERRORS_HPP
#define QSW_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qsw {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A series with no invertible lowest coefficient was used as a divisor.
class ZeroSeriesError : public Error {
public:
  using Error::Error;
};

/// A coefficient beyond the determined truncation order was requested.
class InsufficientOrderError : public Error {
public:
  using Error::Error;
};

/// An infinite q-Pochhammer product whose factors never stabilize.
class NonTerminatingProductError : public Error {
public:
  using Error::Error;
};

/// A hypergeometric sum with neither a terminating parameter nor a
/// truncation-bounded argument.
class NonTerminatingSeriesError : public Error {
public:
  using Error::Error;
};

/// A lower hypergeometric parameter made a Pochhammer factor vanish
/// inside the summation range.
class DivisionByZeroTermError : public Error {
public:
  using Error::Error;
};

/// An argument outside the documented domain of an operation.
class DomainError : public Error {
public:
  using Error::Error;
};

/// Expression text that does not parse. `offset` is the 0-based byte
/// position of the failure; `expected` describes what would have been valid.
class SyntaxError : public Error {
public:
  SyntaxError(std::size_t offset, std::string expected)
      : Error("syntax error at byte " + std::to_string(offset) + ": expected " +
              expected),
        offset_(offset), expected_(std::move(expected)) {}

  std::size_t offset() const { return offset_; }
  const std::string& expected() const { return expected_; }

private:
  std::size_t offset_;
  std::string expected_;
};

/// An evaluation failure, carrying the byte span of the offending
/// subexpression.
class EvalError : public Error {
public:
  EvalError(std::size_t begin, std::size_t end, const std::string& message)
      : Error("evaluation error at bytes [" + std::to_string(begin) + "," +
              std::to_string(end) + "): " + message),
        begin_(begin), end_(end) {}

  std::size_t begin() const { return begin_; }
  std::size_t end() const { return end_; }

private:
  std::size_t begin_;
  std::size_t end_;
};

} // namespace qsw

#endif
