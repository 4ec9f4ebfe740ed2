#pragma once

#include <stdexcept>
#include <string>

namespace saw {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Invalid argument outside an operation's domain (bad dimension, height > N, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// Enumeration request larger than the configured ceiling.
class ResourceLimitError : public Error {
public:
    using Error::Error;
};

class DivergentTailError : public Error {
public:
    using Error::Error;
};

class InsufficientDataError : public Error {
public:
    using Error::Error;
};

// Census / model / report file problems. Each failure mode is its own type.
class FormatError : public Error {
public:
    using Error::Error;
};

class VersionMismatchError : public FormatError {
public:
    using FormatError::FormatError;
};

class ChecksumMismatchError : public FormatError {
public:
    using FormatError::FormatError;
};

class MalformedFileError : public FormatError {
public:
    using FormatError::FormatError;
};

}  // namespace saw
