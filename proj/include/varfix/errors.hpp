#pragma once

#include <stdexcept>
#include <string>

namespace varfix {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Vectors or matrices of incompatible size.
class DimensionMismatch : public Error {
public:
    using Error::Error;
};

// Argument outside the documented domain (t outside [0,1], r < 0, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// A non-finite value appeared while evaluating an operator or functional.
class NumericalBlowup : public Error {
public:
    using Error::Error;
};

// Malformed problem configuration or command line.
class ConfigError : public Error {
public:
    using Error::Error;
};

#define VARFIX_THROW_IF(cond, ExceptionType, msg) \
    do {                                          \
        if (cond) {                               \
            throw ExceptionType(msg);             \
        }                                         \
    } while (0)

} // namespace varfix
