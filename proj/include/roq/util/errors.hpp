#pragma once

#include <stdexcept>
#include <string>

namespace roq {

struct RoqError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Out-of-window access. Distinct from a zero map.
struct WindowError : RoqError {
    using RoqError::RoqError;
};

// A structure map that the chart does not determine.
struct MissingMapError : RoqError {
    using RoqError::RoqError;
};

struct ParseError : RoqError {
    using RoqError::RoqError;
};

struct UnsupportedError : RoqError {
    using RoqError::RoqError;
};

struct DegreeMismatchError : RoqError {
    using RoqError::RoqError;
};

struct DifferentialError : RoqError {
    using RoqError::RoqError;
};

struct ExtensionAmbiguityError : RoqError {
    using RoqError::RoqError;
};

struct InstabilityError : RoqError {
    using RoqError::RoqError;
};

struct UsageError : RoqError {
    using RoqError::RoqError;
};

}  // namespace roq
