#pragma once

#include <stdexcept>
#include <string>

namespace holderkit {

/// Base class for everything thrown by this library.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Paired sequences (measure weights vs. sampled values) have different lengths.
class dimension_error : public error {
public:
    using error::error;
};

/// An input value lies outside the mathematical domain of an operation.
class domain_error : public error {
public:
    using error::error;
};

/// An operation was invoked in a way that makes no sense (empty grid,
/// zero trials, out-of-range step size, malformed textual input).
class usage_error : public error {
public:
    using error::error;
};

/// A quantity that is provably impossible in exact arithmetic was observed;
/// indicates a bug or numerical breakdown, not bad input.
class invariant_error : public error {
public:
    using error::error;
};

/// The exponent p = 2 was passed where the construction requires p != 2.
class exceptional_exponent_error : public domain_error {
public:
    using domain_error::domain_error;
};

/// The weight w sits on the wrong side of 1 for the given p, so w^p - w^q
/// would not be positive.
class sign_condition_error : public domain_error {
public:
    using domain_error::domain_error;
};

}  // namespace holderkit
