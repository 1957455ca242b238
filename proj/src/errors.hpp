#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gcdval {

// Base class for all recoverable library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input text does not conform to the polynomial grammar.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t position)
        : Error(msg + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// An argument that must be prime is not.
class NotPrimeError : public Error {
public:
    explicit NotPrimeError(const std::string& msg) : Error(msg) {}
};

// A polynomial that must be monic is not.
class NotMonicError : public Error {
public:
    explicit NotMonicError(const std::string& msg) : Error(msg) {}
};

// The resultant vanished where a nonzero one is required.
class ZeroResultantError : public Error {
public:
    explicit ZeroResultantError(const std::string& msg) : Error(msg) {}
};

// Parameters fall outside the supported range of an algorithm.
class UnsupportedCaseError : public Error {
public:
    explicit UnsupportedCaseError(const std::string& msg) : Error(msg) {}
};

// A resource guard (enumeration size, factor size) would be exceeded.
class GuardExceededError : public Error {
public:
    explicit GuardExceededError(const std::string& msg) : Error(msg) {}
};

// A certified mathematical invariant failed; indicates a bug, not bad input.
class TheoremViolationError : public std::logic_error {
public:
    explicit TheoremViolationError(const std::string& msg)
        : std::logic_error(msg) {}
};

}  // namespace gcdval
