#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mlbalance {

// Process exit codes used by the command line tool.
enum class ExitCode : int {
    ok = 0,
    usage = 1,
    validation = 2,
    infeasible = 3,
};

class Error : public std::runtime_error {
public:
    Error(const std::string& what, ExitCode code) : std::runtime_error(what), m_Code(code) {}
    [[nodiscard]] ExitCode exit_code() const noexcept { return m_Code; }

private:
    ExitCode m_Code;
};

/// Malformed input file. `line()` is 1-based, 0 when no line applies.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line)
        : Error(line ? "line " + std::to_string(line) + ": " + what : what, ExitCode::validation), m_Line(line) {}
    [[nodiscard]] std::size_t line() const noexcept { return m_Line; }

private:
    std::size_t m_Line;
};

class DuplicateIdError : public Error {
public:
    DuplicateIdError(const std::string& id, std::size_t line)
        : Error("line " + std::to_string(line) + ": duplicate sample id '" + id + "'", ExitCode::validation) {}
};

class EmptyInputError : public Error {
public:
    explicit EmptyInputError(const std::string& what) : Error(what, ExitCode::validation) {}
};

class DimensionError : public Error {
public:
    explicit DimensionError(const std::string& what) : Error(what, ExitCode::validation) {}
};

class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what, ExitCode::validation) {}
};

class ParameterError : public Error {
public:
    explicit ParameterError(const std::string& what) : Error(what, ExitCode::usage) {}
};

/// A stored plan no longer matches the dataset it is applied to.
class ConsistencyError : public Error {
public:
    explicit ConsistencyError(const std::string& what) : Error(what, ExitCode::validation) {}
};

/// Prediction and ground truth files disagree on ids or classes.
class AlignmentError : public Error {
public:
    explicit AlignmentError(const std::string& what) : Error(what, ExitCode::validation) {}
};

class OracleTooLargeError : public Error {
public:
    explicit OracleTooLargeError(const std::string& what) : Error(what, ExitCode::infeasible) {}
};

class InfeasibleError : public Error {
public:
    explicit InfeasibleError(const std::string& what) : Error(what, ExitCode::infeasible) {}
};

} // namespace mlbalance
