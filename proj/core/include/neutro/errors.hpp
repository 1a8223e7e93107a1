#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace neutro {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A value is outside the admissible domain (out of [0,1], NaN, infinite,
/// or an invalid pair). `field()` names the offending component when known;
/// `line()` is nonzero when the value came from a parsed input stream.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& message, std::string field = {},
                         std::size_t line = 0)
        : Error(message), field_(std::move(field)), line_(line) {}

    const std::string& field() const noexcept { return field_; }
    std::size_t line() const noexcept { return line_; }

private:
    std::string field_;
    std::size_t line_;
};

/// Malformed input text (bad header, wrong field count, unparseable number).
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& message)
        : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// A triple does not satisfy the constraints of the requested information kind.
class KindMismatchError : public Error {
public:
    using Error::Error;
};

/// The requested operation has no reduced form for this information kind.
class UnsupportedKindError : public Error {
public:
    using Error::Error;
};

/// An internal invariant that should hold by construction was violated.
/// Seeing this exception indicates a bug in the library, not bad data.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A component that must vanish for the classified information kind did not.
/// Like InternalError, this signals an implementation bug.
class AssertionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace neutro
