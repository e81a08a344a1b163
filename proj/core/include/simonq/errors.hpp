#pragma once

#include <stdexcept>
#include <string>

namespace simonq {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid cipher parameters, malformed values, or out-of-range arguments.
class ParameterError : public Error {
public:
    using Error::Error;
};

/// Missing or malformed input files (pair files, constants files).
class FileError : public Error {
public:
    using Error::Error;
};

/// A computation would exceed a configured resource limit
/// (e.g. the dense-simulation width cap).
class ResourceError : public Error {
public:
    using Error::Error;
};

/// A gate kind is outside the supported set of the selected simulation tier.
class UnsupportedGateError : public Error {
public:
    using Error::Error;
};

} // namespace simonq
