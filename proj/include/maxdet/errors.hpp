#pragma once

#include <stdexcept>
#include <string>

namespace maxdet {

// Checked 64-bit arithmetic would wrap; the operation is refused instead.
class OverflowError : public std::runtime_error {
public:
    explicit OverflowError(const std::string& what) : std::runtime_error(what) {}
};

// A dimension exceeds the guard of an exponential- or factorial-cost routine.
class SizeGuardError : public std::runtime_error {
public:
    explicit SizeGuardError(const std::string& what) : std::runtime_error(what) {}
};

// Mismatched or invalid dimensions between operands.
class DimensionError : public std::invalid_argument {
public:
    explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

// Unparseable or semantically invalid user input (files, flags, matrices).
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace maxdet
