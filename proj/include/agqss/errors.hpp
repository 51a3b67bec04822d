#pragma once

#include <stdexcept>
#include <string>

namespace agqss {

class Error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Precondition violations: mixed fields, division by zero, bad indices.
class DomainError : public Error {
    using Error::Error;
};

/// Configuration or instance validation failures.
class ConfigError : public Error {
    using Error::Error;
};

/// The secret map of a scheme instance is not onto F_q^L.
class NotSurjectiveError : public ConfigError {
    using ConfigError::ConfigError;
};

/// The shares of a scheme instance do not determine the encoded function.
class NotInjectiveError : public ConfigError {
    using ConfigError::ConfigError;
};

/// An enumeration or operator-dimension cap was exceeded.
class CapError : public Error {
    using Error::Error;
};

/// Two supposedly equivalent computation paths disagreed, or an internal
/// count came out impossible. Never recoverable.
class ConsistencyError : public Error {
    using Error::Error;
};

/// Share values inconsistent with the share code.
class NotACodewordError : public Error {
    using Error::Error;
};

}  // namespace agqss
