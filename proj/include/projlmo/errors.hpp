#pragma once

#include <stdexcept>
#include <string>

namespace projlmo {

/// Malformed or inconsistent input (bad descriptor, wrong dimension, NaN).
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

class DimensionError : public InputError {
public:
    explicit DimensionError(const std::string& what) : InputError(what) {}
};

class NonFiniteError : public InputError {
public:
    explicit NonFiniteError(const std::string& what) : InputError(what) {}
};

/// An internal consistency check failed (e.g. a gap far below zero).
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace projlmo
