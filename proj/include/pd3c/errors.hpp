#pragma once

#include <stdexcept>
#include <string>

namespace pd3c {

/// Base class of all pd3c errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Inversion or division by zero in a prime field.
class DivisionByZero : public Error {
public:
    using Error::Error;
};

/// Exponent-vector length disagrees with the ring or order arity.
class ArityError : public Error {
public:
    using Error::Error;
};

/// Operands belong to different rings.
class RingMismatch : public Error {
public:
    using Error::Error;
};

/// Forms of unequal degree where equal degrees are required.
class DegreeMismatch : public Error {
public:
    using Error::Error;
};

/// Checked exponent or coefficient arithmetic overflowed.
class OverflowError : public Error {
public:
    using Error::Error;
};

/// A randomized genericity condition failed after the retry budget.
class GenericityFailure : public Error {
public:
    using Error::Error;
};

/// A computed object contradicts a pinned expected value.
class VerificationFailure : public Error {
public:
    using Error::Error;
};

/// An operation was called outside its contract.
class ContractViolation : public Error {
public:
    using Error::Error;
};

/// Invariant breakage that indicates a kernel bug, not a user error.
class InternalError : public Error {
public:
    using Error::Error;
};

/// Malformed input text; carries 1-based line and column.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, int line_no, int col_no)
        : Error(msg), line(line_no), col(col_no) {}
    int line = 0;
    int col = 0;
};

} // namespace pd3c
