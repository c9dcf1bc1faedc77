#pragma once

#include <stdexcept>
#include <string>

namespace bei {

// Bad user input: malformed graph text, labels out of range, disconnected
// input handed to an operation that requires a connected graph, ...
struct invalid_input : std::invalid_argument {
  explicit invalid_input(const std::string& msg) : std::invalid_argument(msg) {}
};

// Instance is structurally too large for an enumeration guard
// (e.g. cutset enumeration beyond the configured vertex limit).
struct size_limit : std::runtime_error {
  explicit size_limit(const std::string& msg) : std::runtime_error(msg) {}
};

// A computation ran past its configured budget (basis size, reduction steps,
// variable count, rational coefficient size).  Callers map this to an
// "Unknown" verdict instead of aborting.
struct resource_limit : std::runtime_error {
  explicit resource_limit(const std::string& msg) : std::runtime_error(msg) {}
};

// Operation does not apply to the given instance (e.g. the connectivity
// necessary condition on a complete graph).
struct not_applicable : std::runtime_error {
  explicit not_applicable(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace bei
