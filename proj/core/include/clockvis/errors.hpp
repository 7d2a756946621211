#pragma once

#include <stdexcept>
#include <string>

namespace clockvis {

// Shape or structure of an argument is wrong (dimension mismatch, non-square,
// non-Hermitian). Indicates a programming error on the caller side.
class StructuralError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A parameter value lies outside its documented domain.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An infinite sum could not be truncated within the requested tolerance.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace clockvis
