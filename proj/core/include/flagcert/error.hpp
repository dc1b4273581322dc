#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace flagcert {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was asked to work beyond the sizes its exhaustive engine supports.
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

/// Arguments of incompatible sizes or types (e.g. |H| > |G|, flags over different types).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A well-formed input that violates a structural rule (asymmetric Q, duplicate flag, ...).
class StructureError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input. Line and column are 1-based; column 0 means "whole line".
class ParseError : public Error {
 public:
  ParseError(const std::string& source, std::size_t line, std::size_t column,
             const std::string& message);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace flagcert
