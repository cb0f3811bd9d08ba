#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace negflow {

/// Malformed graph, vector, or CNF text. `line()` is 1-based, 0 if unknown.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// An exhaustive enumeration would exceed its configured limit.
class CapExceeded : public std::runtime_error {
public:
    CapExceeded(std::string cap_name, std::size_t cap)
        : std::runtime_error(cap_name + " cap of " + std::to_string(cap) + " exceeded"),
          cap_name_(std::move(cap_name)),
          cap_(cap) {}
    const std::string& cap_name() const { return cap_name_; }
    std::size_t cap() const { return cap_; }

private:
    std::string cap_name_;
    std::size_t cap_;
};

class InvalidArcId : public std::out_of_range {
public:
    explicit InvalidArcId(std::size_t id)
        : std::out_of_range("invalid arc id " + std::to_string(id)), id_(id) {}
    std::size_t id() const { return id_; }

private:
    std::size_t id_;
};

class DimensionMismatch : public std::invalid_argument {
public:
    DimensionMismatch(std::size_t expected, std::size_t actual)
        : std::invalid_argument("dimension mismatch: expected " + std::to_string(expected) +
                                ", got " + std::to_string(actual)) {}
};

/// Flow conservation fails (or an entry is negative) at `node()`, 0-based.
class NotACirculation : public std::invalid_argument {
public:
    NotACirculation(std::size_t node, const std::string& what)
        : std::invalid_argument(what), node_(node) {}
    std::size_t node() const { return node_; }

private:
    std::size_t node_;
};

}  // namespace negflow
