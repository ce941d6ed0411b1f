#ifndef RANGEKM_ERROR_HPP
#define RANGEKM_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace rangekm {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
    DimensionMismatch(std::size_t expected, std::size_t actual)
        : Error("dimension mismatch: expected " + std::to_string(expected) + ", got " + std::to_string(actual)) {}
};

class IndexError : public Error {
public:
    using Error::Error;
};

class InvalidK : public Error {
public:
    InvalidK(std::size_t k, std::size_t n)
        : Error("invalid k = " + std::to_string(k) + " for a dataset of " + std::to_string(n) + " rows") {}
};

class InvalidConfig : public Error {
public:
    using Error::Error;
};

class InvalidDataset : public Error {
public:
    using Error::Error;
};

/// Label or assignment vectors that do not line up with the data.
class ShapeError : public Error {
public:
    using Error::Error;
};

/// Malformed input text. `line()` is 1-based; 0 when unknown.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// A well-formed value outside its domain, e.g. an unknown blood group.
class ValidationError : public Error {
public:
    ValidationError(std::string value, const std::string& what)
        : Error(what), value_(std::move(value)) {}

    const std::string& value() const noexcept { return value_; }

private:
    std::string value_;
};

class DuplicateKey : public Error {
public:
    explicit DuplicateKey(const std::string& key)
        : Error("duplicate key '" + key + "'"), key_(key) {}

    const std::string& key() const noexcept { return key_; }

private:
    std::string key_;
};

class UnknownLocation : public Error {
public:
    explicit UnknownLocation(const std::string& location)
        : Error("unknown location '" + location + "'"), location_(location) {}

    const std::string& location() const noexcept { return location_; }

private:
    std::string location_;
};

class IoError : public Error {
public:
    using Error::Error;
};

} // namespace rangekm

#endif
