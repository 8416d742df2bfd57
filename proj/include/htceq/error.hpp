#pragma once

#include <cstddef>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <string>

namespace htceq {

//! Base class of every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

//! An enumeration would exceed the configured budget.
class BudgetExceeded : public Error {
  public:
    BudgetExceeded(std::string const &what, double required, double cap)
    : Error{what + ": search space of " + count(required) + " exceeds budget " + count(cap)}
    , required_{required}
    , cap_{cap} {}

    [[nodiscard]] double required() const { return required_; }
    [[nodiscard]] double cap() const { return cap_; }

  private:
    static std::string count(double n) {
        if (n < 1e18) {
            return std::to_string(static_cast<unsigned long long>(n));
        }
        std::ostringstream out;
        out << std::setprecision(3) << n;
        return out.str();
    }

    double required_;
    double cap_;
};

//! Exact integer arithmetic left the representable range.
class ArithmeticOverflow : public Error {
  public:
    using Error::Error;
};

//! An atom mentions a variable outside the signature.
class UnknownVariable : public Error {
  public:
    explicit UnknownVariable(std::string name)
    : Error{"unknown variable: " + name}
    , name_{std::move(name)} {}

    [[nodiscard]] std::string const &name() const { return name_; }

  private:
    std::string name_;
};

//! A caller broke an operation's precondition.
class PreconditionViolation : public Error {
  public:
    using Error::Error;
};

//! Malformed program text; carries a 1-based position.
class SyntaxError : public Error {
  public:
    SyntaxError(std::string const &msg, std::size_t line, std::size_t column)
    : Error{std::to_string(line) + ":" + std::to_string(column) + ": syntax error: " + msg}
    , line_{line}
    , column_{column} {}

    [[nodiscard]] std::size_t line() const { return line_; }
    [[nodiscard]] std::size_t column() const { return column_; }

  private:
    std::size_t line_;
    std::size_t column_;
};

//! Well-formed program text that violates a program-level rule.
class SemanticError : public Error {
  public:
    SemanticError(std::string const &msg, std::size_t line = 0, std::size_t column = 0)
    : Error{(line > 0 ? std::to_string(line) + ":" + std::to_string(column) + ": " : std::string{}) +
            "semantic error: " + msg}
    , line_{line}
    , column_{column} {}

    [[nodiscard]] std::size_t line() const { return line_; }
    [[nodiscard]] std::size_t column() const { return column_; }

  private:
    std::size_t line_;
    std::size_t column_;
};

} // namespace htceq
