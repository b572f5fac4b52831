#pragma once

#include <stdexcept>
#include <string>

namespace scenefix {

// Base class for all library failures. CLI maps subclasses to exit codes:
// SchemaError -> 2, IoError -> 3, anything else -> 1.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input content: bad JSON schema, unknown enum values, duplicate ids.
struct SchemaError : Error {
  using Error::Error;
};

// Missing or unreadable files.
struct IoError : Error {
  using Error::Error;
};

}  // namespace scenefix
