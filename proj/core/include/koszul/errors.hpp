#pragma once

#include <stdexcept>
#include <string>

namespace koszul {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// DSL or file-format problem with a source location (1-based; 0 = unknown).
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, int line = 0, int column = 0)
      : Error(format(msg, line, column)), line_(line), column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  static std::string format(const std::string& msg, int line, int column) {
    if (line <= 0) return msg;
    return std::to_string(line) + ":" + std::to_string(column) + ": " + msg;
  }
  int line_;
  int column_;
};

// A relation term whose path length is not 2.
class NotQuadratic : public ParseError {
 public:
  NotQuadratic(const std::string& term, int line, int column)
      : ParseError("NotQuadratic: term '" + term + "' is not a length-2 path", line, column),
        term_(term) {}
  const std::string& term() const { return term_; }

 private:
  std::string term_;
};

// A computation needed more degrees or homological steps than it was given.
class HorizonExceeded : public Error {
 public:
  using Error::Error;
};

class Unsupported : public Error {
 public:
  using Error::Error;
};

}  // namespace koszul
