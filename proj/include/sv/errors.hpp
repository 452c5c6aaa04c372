#pragma once

#include <stdexcept>
#include <string>

namespace sv {

/// Requested object exceeds a configured size or integer cap.
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Family parameter outside its published validity range.
class RangeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Degree splitting violates the splitting invariants.
class InvalidSplittingError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Input shape outside the preconditions of a structure-specific identity.
class ShapeMismatchError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace sv
