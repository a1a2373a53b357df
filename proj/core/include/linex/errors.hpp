#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace linex {

/// Invalid argument value (out-of-range bias, r > m, empty grid, ...).
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Operand lengths that do not line up.
class DimensionError : public std::invalid_argument {
public:
    DimensionError(const std::string& what, std::size_t expected, std::size_t actual)
        : std::invalid_argument(what + ": expected " + std::to_string(expected) + ", got " +
                                std::to_string(actual)),
          expected_(expected),
          actual_(actual) {}

    [[nodiscard]] std::size_t expected() const noexcept { return expected_; }
    [[nodiscard]] std::size_t actual() const noexcept { return actual_; }

private:
    std::size_t expected_;
    std::size_t actual_;
};

/// A generator matrix without full row rank.
class RankError : public std::runtime_error {
public:
    RankError(std::size_t rank, std::size_t rows)
        : std::runtime_error("matrix is rank deficient: rank " + std::to_string(rank) + " < " +
                             std::to_string(rows) + " rows"),
          rank_(rank),
          rows_(rows) {}

    [[nodiscard]] std::size_t rank() const noexcept { return rank_; }
    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }

private:
    std::size_t rank_;
    std::size_t rows_;
};

/// Malformed text input. line() is 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}

    [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// The requested exact computation exceeds a configured size cap.
class InfeasibleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Internal arithmetic check failed; signals inconsistent input data.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace linex
