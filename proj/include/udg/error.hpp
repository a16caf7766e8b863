#pragma once

#include <stdexcept>
#include <string>

namespace udg {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two QuadExt operands live in different extensions Q[sqrt d].
class DiscriminantMismatch : public Error {
public:
    using Error::Error;
};

/// Malformed input: bad syntax, bad field values, out-of-range indices.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Well-formed input that breaks a Drawing invariant.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// An operation was called outside its precondition.
class PreconditionError : public Error {
public:
    using Error::Error;
};

}  // namespace udg
