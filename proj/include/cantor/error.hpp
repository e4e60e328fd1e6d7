#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cantor {

// Base of every error the library throws on a contract violation.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A value lies outside the set an operation is defined on
// (e.g. a negative Natural, 0 passed where n >= 1 is required).
class DomainError : public Error {
public:
    using Error::Error;
};

// Two bijections whose codomain and domain do not line up.
class CompositionError : public Error {
public:
    using Error::Error;
};

// Malformed text input. `position` is a 0-based offset into the input.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class EvalError : public Error {
public:
    using Error::Error;
};

class UnknownGuestError : public Error {
public:
    using Error::Error;
};

}  // namespace cantor
