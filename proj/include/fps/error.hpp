#pragma once

#include <stdexcept>

namespace fps {

/// Inputs violate an operation's domain (mixed fields, mixed truncation
/// orders, zero divisors, series without the required order, ...).
struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Text or JSON input cannot be decoded into a value.
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An identity that is guaranteed by construction failed to hold.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace fps
