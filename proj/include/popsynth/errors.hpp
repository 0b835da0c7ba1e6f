#pragma once

#include <stdexcept>
#include <string>

namespace popsynth {

// Input could not be read or did not conform to a file format (CLI exit 2).
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Input parsed but violates a domain rule (CLI exit 2).
class ValidationError : public std::runtime_error {
public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Inputs are mutually inconsistent beyond repair, or synthesis ran out of
// persons mid-build (CLI exit 3).
class FeasibilityError : public std::runtime_error {
public:
  explicit FeasibilityError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace popsynth
