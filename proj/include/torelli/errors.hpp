#pragma once

#include <stdexcept>
#include <string>

namespace torelli {

/// Base of every error raised by the library. `code()` is the stable,
/// machine-readable tag printed by the CLI as `error: <CODE>`.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

  /// Usage and input-format problems, as opposed to mathematical ones.
  virtual bool is_input_error() const noexcept { return false; }

 private:
  std::string code_;
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& m) : Error("INVALID_ARGUMENT", m) {}
  bool is_input_error() const noexcept override { return true; }
};

class GenusMismatch : public Error {
 public:
  explicit GenusMismatch(const std::string& m) : Error("GENUS_MISMATCH", m) {}
  bool is_input_error() const noexcept override { return true; }
};

class ParseError : public Error {
 public:
  ParseError(const std::string& m, int line, int column)
      : Error("PARSE_ERROR", "line " + std::to_string(line) + ", column " +
                                 std::to_string(column) + ": " + m),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }
  bool is_input_error() const noexcept override { return true; }

 private:
  int line_;
  int column_;
};

class UnknownGenerator : public Error {
 public:
  explicit UnknownGenerator(const std::string& name)
      : Error("UNKNOWN_GENERATOR", "unknown generator '" + name + "'") {}
  bool is_input_error() const noexcept override { return true; }
};

class InvalidDescriptor : public Error {
 public:
  explicit InvalidDescriptor(const std::string& m) : Error("INVALID_DESCRIPTOR", m) {}
  bool is_input_error() const noexcept override { return true; }
};

class ValidationFailed : public Error {
 public:
  explicit ValidationFailed(const std::string& m) : Error("VALIDATION_FAILED", m) {}
};

class NotInJk : public Error {
 public:
  explicit NotInJk(const std::string& m) : Error("NOT_IN_JK", m) {}
};

class NotALieElement : public Error {
 public:
  explicit NotALieElement(const std::string& m) : Error("NOT_A_LIE_ELEMENT", m) {}
};

class ArfNonZero : public Error {
 public:
  explicit ArfNonZero(const std::string& m) : Error("ARF_NONZERO", m) {}
};

class MissingInverse : public Error {
 public:
  explicit MissingInverse(const std::string& m) : Error("MISSING_INVERSE", m) {}
};

}  // namespace torelli
