#pragma once

#include <stdexcept>
#include <string>

namespace cyclohodge {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// q is 1 or has two distinct prime factors.
struct NotPrimePower : Error {
    using Error::Error;
};

// Parameters outside an operation's domain (n < 4, p | n, q = 2 for CM data, ...).
struct InvalidParams : Error {
    using Error::Error;
};

// Ordered pair violates a != b, a != q - b.
struct BadPair : Error {
    using Error::Error;
};

// A caller-side precondition does not hold (e.g. a != b_max(a)).
struct PreconditionViolated : Error {
    using Error::Error;
};

// Request exceeds a configured enumeration or size bound.
struct DomainTooLarge : Error {
    using Error::Error;
};

// A checked integer operation would overflow 64 bits.
struct Overflow : Error {
    using Error::Error;
};

// A construction-time self-check failed. Indicates a bug (or an injected
// fault in tests), never a user error.
struct InvariantViolation : Error {
    using Error::Error;
};

} // namespace cyclohodge
