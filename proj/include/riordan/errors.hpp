#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace riordan {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invalid input at a structural level: failed pair validation, wrong
/// generator family, bad configuration, rejected query.
struct ValidationError : Error {
    using Error::Error;
};

/// A mathematical precondition does not hold: non-invertible reciprocal,
/// non-composable composition or reversion, truncation-order mismatch,
/// quotient outside the series ring.
struct MathDomainError : Error {
    using Error::Error;
};

/// Syntax error in an expression or in a machine response being decoded.
/// Carries the byte offset of the failure and the expected-token set.
struct ParseError : Error {
    ParseError(std::size_t offset, std::string expected_tokens, const std::string& what)
        : Error(what), offset(offset), expected(std::move(expected_tokens)) {}
    explicit ParseError(const std::string& what) : Error(what), offset(0) {}

    std::size_t offset;
    std::string expected;
};

/// Network-level failure in the OEIS client.
struct NetworkError : Error {
    using Error::Error;
};

/// Offline mode was requested and the query is not in the cache.
struct OeisOfflineMissError : NetworkError {
    using NetworkError::NetworkError;
};

} // namespace riordan
