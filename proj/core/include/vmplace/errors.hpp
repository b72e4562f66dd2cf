#pragma once

#include <stdexcept>
#include <string>

namespace vmplace {

/// Base class for every error raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or out-of-bounds input (scenario fields, duplicate ids, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// An id did not resolve to a known VM or server.
class LookupError : public Error {
public:
    using Error::Error;
};

/// An operation was called outside its mathematical domain
/// (zero capacity with nonzero demand, mean over zero servers, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// The workload classifier cannot derive a dominant set (all-zero demand).
class ClassificationError : public Error {
public:
    using Error::Error;
};

/// An exact-oracle instance exceeds the configured enumeration limits.
class SizeLimitError : public Error {
public:
    using Error::Error;
};

/// A migration plan was applied against a state that changed since planning.
class StalePlanError : public Error {
public:
    using Error::Error;
};

}  // namespace vmplace
