#pragma once

#include <stdexcept>
#include <string>

namespace fsing {

/// Base class of every error raised by the toolkit.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input problems: malformed files, non-prime characteristic, bad arguments.
class InputError : public Error {
public:
    using Error::Error;
};

/// A configured computational budget was exhausted; verdicts become "unknown".
class CapError : public Error {
public:
    using Error::Error;
};

/// Internal inconsistency (a lift that must exist did not, etc).
class InternalError : public Error {
public:
    using Error::Error;
};

#define FSING_DECLARE_ERROR(Name, Base)          \
    class Name : public Base {                   \
    public:                                      \
        explicit Name(const std::string& what)   \
            : Base(std::string(#Name ": ") + what) {} \
    }

FSING_DECLARE_ERROR(ZeroInverse, Error);
FSING_DECLARE_ERROR(ZeroPolynomial, Error);
FSING_DECLARE_ERROR(ExponentOverflow, Error);
FSING_DECLARE_ERROR(UnitIdeal, Error);
FSING_DECLARE_ERROR(WindowTooSmall, Error);
FSING_DECLARE_ERROR(PreconditionViolated, Error);
FSING_DECLARE_ERROR(NonPrimeCharacteristic, InputError);
FSING_DECLARE_ERROR(NonHomogeneous, InputError);
FSING_DECLARE_ERROR(NotRegular, InputError);
FSING_DECLARE_ERROR(UnknownFixture, InputError);
FSING_DECLARE_ERROR(PairCapExceeded, CapError);
FSING_DECLARE_ERROR(CapExceeded, CapError);
FSING_DECLARE_ERROR(DimensionCapExceeded, CapError);
FSING_DECLARE_ERROR(NotStabilized, CapError);
FSING_DECLARE_ERROR(LiftFailure, InternalError);

#undef FSING_DECLARE_ERROR

/// Parse failure with a 1-based source position.
class ParseError : public InputError {
public:
    ParseError(int line, int column, const std::string& what)
        : InputError("ParseError at " + std::to_string(line) + ":" + std::to_string(column) + ": " + what),
          line_(line), column_(column) {}
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

}  // namespace fsing
