#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace grlnet {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Incompatible tensor/layer shapes. The message names both shapes.
class ShapeError : public Error {
public:
    explicit ShapeError(const std::string& what) : Error(what) {}
};

/// Contract violation on an argument value (bad label, bad range, ...).
class ValueError : public Error {
public:
    explicit ValueError(const std::string& what) : Error(what) {}
};

/// Malformed or truncated data file. Carries the byte offset of the problem.
class FormatError : public Error {
public:
    FormatError(const std::string& what, std::size_t byte_offset)
        : Error(what + " (byte offset " + std::to_string(byte_offset) + ")"),
          offset(byte_offset) {}
    std::size_t offset;
};

/// Training diverged (non-finite or exploding loss). Carries the step index.
class DivergenceError : public Error {
public:
    DivergenceError(const std::string& what, std::size_t step_index)
        : Error(what + " at step " + std::to_string(step_index)), step(step_index) {}
    std::size_t step;
};

} // namespace grlnet
