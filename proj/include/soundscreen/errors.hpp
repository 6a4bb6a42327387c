#pragma once

#include <stdexcept>
#include <string>

namespace soundscreen {

/// Base class for all pipeline errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// audio_io
struct DecodeError : Error {
    using Error::Error;
};
struct UnsupportedFormat : Error {
    using Error::Error;
};

// features
struct TooShort : Error {
    using Error::Error;
};
struct ShapeMismatch : Error {
    using Error::Error;
};
struct DegenerateBand : Error {
    using Error::Error;
};

// net
struct NoModality : Error {
    using Error::Error;
};
struct EmptySplit : Error {
    using Error::Error;
};

// cohort
struct SchemaError : Error {
    int line;
    std::string field;
    SchemaError(int line_, const std::string& field_, const std::string& msg)
        : Error("manifest line " + std::to_string(line_) + ", field '" + field_ + "': " + msg),
          line(line_),
          field(field_) {}
};
struct ConsistencyError : Error {
    using Error::Error;
};
struct DuplicateKey : Error {
    using Error::Error;
};
struct InsufficientCohort : Error {
    using Error::Error;
};
struct Unmatchable : Error {
    using Error::Error;
};

// eval
struct OneClassOnly : Error {
    using Error::Error;
};
struct TooDegenerate : Error {
    using Error::Error;
};

// progression
struct DuplicateTimestamp : Error {
    using Error::Error;
};

// synthkit
struct SpecError : Error {
    using Error::Error;
};

// cli
struct ConfigError : Error {
    using Error::Error;
};

}  // namespace soundscreen
