#pragma once

#include <stdexcept>
#include <string>

namespace distkit {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input matrix/state fails a structural invariant (shape, hermiticity, PSD, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

// Scalar or integer parameter outside its documented range.
class ParameterError : public Error {
public:
    using Error::Error;
};

// Requested object would exceed the configured dimension cap.
class CapacityError : public Error {
public:
    using Error::Error;
};

// A probabilistic local operation annihilated the state (outcome probability ~ 0).
class NullOutcomeError : public Error {
public:
    using Error::Error;
};

// Filesystem-level failure.
class IoError : public Error {
public:
    using Error::Error;
};

// A protocol ran correctly but cannot deliver the requested result
// (e.g. fidelity stuck at or below 1/2). Distinct from usage errors.
class ProtocolFailure : public Error {
public:
    using Error::Error;
};

} // namespace distkit
