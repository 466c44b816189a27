#pragma once

#include <stdexcept>
#include <string>

namespace qlin {

// Base for everything thrown by this library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed or inconsistent input data (bad JSON, schema violations,
// spec fields that fail their invariants). The CLI maps these to exit 2.
struct ValidationError : Error {
  explicit ValidationError(const std::string& what) : Error(what) {}
};

// A computation that cannot proceed on mathematically valid-looking input
// (division by zero, singular matrix, incompatible radicands, ...).
// The CLI maps these to exit 1.
struct MathError : Error {
  explicit MathError(const std::string& what) : Error(what) {}
};

}  // namespace qlin
