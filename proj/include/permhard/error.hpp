#pragma once

#include <stdexcept>
#include <string>

namespace permhard {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A desk-scale size guard (enumeration, statevector, permanent) was exceeded.
class GuardError : public Error {
public:
    GuardError(const std::string& guard, const std::string& detail)
        : Error("guard '" + guard + "' exceeded: " + detail) {}
};

/// Malformed input text (netlists, certificates).
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& detail)
        : Error("line " + std::to_string(line) + ": " + detail), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// An argument violated an operation's precondition.
class DomainError : public Error {
public:
    using Error::Error;
};

/// An exact identity that must hold did not (pipeline corruption, bad fixture).
class VerificationError : public Error {
public:
    using Error::Error;
};

}  // namespace permhard
