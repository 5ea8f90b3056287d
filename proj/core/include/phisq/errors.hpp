#pragma once

#include <stdexcept>
#include <string>

namespace phisq {

/// Root of every error the library throws.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input.
class ParseError : public Error {
public:
    using Error::Error;
};

/// A numerator, denominator or natural that had to be positive was zero.
class ZeroValue : public ParseError {
public:
    using ParseError::ParseError;
};

/// The input is beyond the scale the library handles exactly.
class UnsupportedScale : public Error {
public:
    using Error::Error;
};

/// A cofactor could not be split within the configured effort budget.
class FactorizationFailure : public UnsupportedScale {
public:
    using UnsupportedScale::UnsupportedScale;
};

/// Primality of a value above the proven deterministic bound could not be decided.
class PrimalityUnsupported : public UnsupportedScale {
public:
    using UnsupportedScale::UnsupportedScale;
};

/// Checked exponent arithmetic left the representable range.
class ExponentOverflow : public UnsupportedScale {
public:
    using UnsupportedScale::UnsupportedScale;
};

}  // namespace phisq
