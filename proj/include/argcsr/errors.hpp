#pragma once

#include <stdexcept>
#include <string>

namespace argcsr {

/// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// An index refers to a position outside the valid range.
class BoundsError : public Error {
public:
    using Error::Error;
};

/// Matrix/vector shapes do not agree, or a dimension is zero.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// A tuning or configuration parameter has an invalid value.
class ParameterError : public Error {
public:
    using Error::Error;
};

/// Internal consistency violation; indicates a bug, not bad input.
class InternalError : public Error {
public:
    using Error::Error;
};

/// Input text or byte stream is malformed or truncated.
class ParseError : public Error {
public:
    using Error::Error;
};

/// The input is well formed but uses a feature this library does not handle.
class UnsupportedError : public Error {
public:
    using Error::Error;
};

/// A binary container's magic, version, or tag does not match.
class FormatError : public Error {
public:
    using Error::Error;
};

/// Writing to a sink failed.
class IoError : public Error {
public:
    using Error::Error;
};

/// A format's SpMV result disagrees with the CSR reference.
class CorrectnessError : public Error {
public:
    using Error::Error;
};

} // namespace argcsr
