#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

namespace radsq {

/// Bad input or a violated precondition. Maps to CLI exit code 1.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Quiver-file syntax error, located by 1-based line and column.
class ParseError : public UsageError {
public:
    enum class Kind { MalformedHeader, NonNumeric, RowLength, NegativeEntry, RowCount };

    ParseError(Kind kind, const std::string& what, int line, int column)
        : UsageError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                     what),
          kind_(kind), line_(line), column_(column) {}

    Kind kind() const noexcept { return kind_; }
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    Kind kind_;
    int line_;
    int column_;
};

/// A computed counterexample to one of the structural statements the library
/// verifies. Carries the full payload so the harness can serialize it.
/// Maps to CLI exit code 2.
class TheoremViolation : public std::runtime_error {
public:
    TheoremViolation(std::string statement, nlohmann::json payload)
        : std::runtime_error("theorem violation: " + statement),
          statement_(std::move(statement)), payload_(std::move(payload)) {}

    const std::string& statement() const noexcept { return statement_; }
    const nlohmann::json& payload() const noexcept { return payload_; }

private:
    std::string statement_;
    nlohmann::json payload_;
};

/// Internal consistency failure of the linear-algebra engine (e.g. a
/// non-exact resolution). Never expected; distinct from theorem violations.
class EngineError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace radsq
