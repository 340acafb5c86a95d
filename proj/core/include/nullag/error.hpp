#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace nullag {

enum class Errc {
    DivisionByZero,
    UnsupportedAtom,
    DomainError,
    NotNull,
    NonexactTop,
    IntegrationUnsupported,
    NonlinearTop,
    NoJet,
    UnsupportedOrder,
    MissingAtom,
    NumericSingularity,
    NullODE,
    SyntaxError,
    UnsupportedExponent,
    Cancelled,
};

std::string_view errc_name(Errc code) noexcept;

/// Base of every error raised by the library. The code identifies the failure
/// class; what() carries a human-readable message.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

/// Parse failure with a 1-based source position.
class SyntaxError : public Error {
public:
    SyntaxError(Errc code, const std::string& message, std::size_t line, std::size_t column)
        : Error(code, message + " at line " + std::to_string(line) + ", column " +
                          std::to_string(column)),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace nullag
