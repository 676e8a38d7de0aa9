#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace genset {

// Every library failure derives from Error. The CLI maps the categories
// onto exit codes: usage problems 1, resource limits 2, invariant breaches 3.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegreeMismatch : public Error {
 public:
  DegreeMismatch(std::size_t a, std::size_t b)
      : Error("degree mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

class InvalidSpec : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error("parse error at " + std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class PointOutOfRange : public Error {
 public:
  PointOutOfRange(std::size_t point, std::size_t degree)
      : Error("point " + std::to_string(point) + " outside 1.." + std::to_string(degree)) {}
};

// Resource limits. Both map to exit status 2.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

class OrderExceedsCap : public LimitExceeded {
 public:
  OrderExceedsCap(const std::string& order, std::size_t cap)
      : LimitExceeded("group order " + order + " exceeds cap " + std::to_string(cap)) {}
};

class BudgetExceeded : public LimitExceeded {
 public:
  using LimitExceeded::LimitExceeded;
};

// A computed result contradicts a theorem the code relies on.
class InternalError : public Error {
 public:
  using Error::Error;
};

class AuditFailure : public InternalError {
 public:
  using InternalError::InternalError;
};

class Mismatch : public InternalError {
 public:
  using InternalError::InternalError;
};

class LoopsUnsupported : public Error {
 public:
  LoopsUnsupported() : Error("chromatic number is not defined for graphs with loops") {}
};

class Undefined : public Error {
 public:
  using Error::Error;
};

class UnknownSuite : public Error {
 public:
  explicit UnknownSuite(const std::string& name) : Error("unknown suite: " + name) {}
};

}  // namespace genset
