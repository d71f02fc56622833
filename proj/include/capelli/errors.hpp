#pragma once

#include <stdexcept>
#include <string>

namespace capelli {

/// Requested computation exceeds the configured work or memory guard.
class FeasibilityError : public std::runtime_error {
 public:
  explicit FeasibilityError(const std::string& what) : std::runtime_error(what) {}
};

/// Two routes that are guaranteed to agree did not. Always a bug, never an input error.
class ConsistencyError : public std::runtime_error {
 public:
  explicit ConsistencyError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace capelli
