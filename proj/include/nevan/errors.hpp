#pragma once

#include <stdexcept>
#include <string>

namespace nevan {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract input (non-reduced element, mixed fields, bad arity).
class InputError : public Error {
public:
    using Error::Error;
};

/// Over the imperfect field F_p(t) a polynomial such as z^p - t has no
/// square-free part with coefficients in the field; operations that need one
/// raise this.
class InseparableError : public InputError {
public:
    using InputError::InputError;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
    using Error::Error;
};

/// exact_div called on a non-multiple.
class DivisibilityError : public Error {
public:
    using Error::Error;
};

/// A precondition of a theorem pipeline step does not hold.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// An identity that must hold exactly did not. Always a bug or a
/// misreading of a definition, never a numerical effect.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

/// Text input could not be parsed; carries a 1-based column.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t column)
        : Error(what + " at column " + std::to_string(column)), reason_(what), column_(column) {}
    std::size_t column() const noexcept { return column_; }
    /// The message without the column suffix.
    const std::string& reason() const noexcept { return reason_; }

private:
    std::string reason_;
    std::size_t column_;
};

}  // namespace nevan
