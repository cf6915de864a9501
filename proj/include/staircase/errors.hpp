#pragma once

#include <stdexcept>
#include <string>

namespace staircase {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An exponent sum or product left the representable range (or the
/// configured ceiling).
class ExponentOverflow : public Error {
public:
    using Error::Error;
};

class ZeroIdealError : public Error {
public:
    using Error::Error;
};

/// Raised by socle and type computations when S/I does not have finite length.
class NotMPrimary : public Error {
public:
    using Error::Error;
};

class InvalidParams : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

/// A computed quantity disagreed with its closed-form prediction.
class VerificationFailure : public Error {
public:
    using Error::Error;
};

}  // namespace staircase
