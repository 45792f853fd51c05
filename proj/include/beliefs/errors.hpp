#pragma once

#include <stdexcept>
#include <string>

namespace beliefs {

// Bad inputs: malformed mass assignments, frame mismatches, out-of-range
// parameters. Maps to CLI exit code 2.
class validation_error : public std::runtime_error {
public:
  explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

// Well-formed inputs on which the requested operation is undefined
// (total conflict, dogmatic input to a decomposition-based rule, ...).
// Maps to CLI exit code 3.
class computation_error : public std::runtime_error {
public:
  explicit computation_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace beliefs
