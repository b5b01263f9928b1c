#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chordlab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class UnboundVariable : public Error {
  public:
    explicit UnboundVariable(const std::string& var)
        : Error("unbound variable '" + var + "'"), variable_(var) {}
    const std::string& variable() const noexcept { return variable_; }

  private:
    std::string variable_;
};

class NotSymmetric : public Error {
  public:
    using Error::Error;
};

class NotHomogeneous : public Error {
  public:
    using Error::Error;
};

class BadConstantTerm : public Error {
  public:
    using Error::Error;
};

class ParseError : public Error {
  public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          message_(what), line_(line), column_(column) {}
    /// Message without the position prefix.
    const std::string& message() const noexcept { return message_; }
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

  private:
    std::string message_;
    std::size_t line_;
    std::size_t column_;
};

class DuplicateRule : public Error {
  public:
    explicit DuplicateRule(const std::string& var, std::size_t line)
        : Error("line " + std::to_string(line) + ": duplicate rule for '" + var + "'"), variable_(var) {}
    const std::string& variable() const noexcept { return variable_; }

  private:
    std::string variable_;
};

class ArcNotFound : public Error {
  public:
    using Error::Error;
};

class UnknownCheckId : public Error {
  public:
    explicit UnknownCheckId(const std::string& id) : Error("unknown check id '" + id + "'"), id_(id) {}
    const std::string& id() const noexcept { return id_; }

  private:
    std::string id_;
};

/// Raised when two computation routes that must agree do not.
class IdentityViolation : public Error {
  public:
    using Error::Error;
};

} // namespace chordlab
