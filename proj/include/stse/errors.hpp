#pragma once

#include <stdexcept>
#include <string>

namespace stse {

/// An input violates an operation's stated precondition.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A randomized search ran out of proposals. Callers may reseed.
class BudgetExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A construction that is guaranteed to succeed did not. Indicates a bug.
class DefectError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Malformed instance or graph text.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line),
          column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

}  // namespace stse
