#pragma once

#include <stdexcept>
#include <string>

namespace g2 {

/// Bad user input: malformed query, unbalanced constraints, unsupported ambient.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

/// Two independent computations of the same quantity disagreed, or a result
/// that must be an integer was not.
class ConsistencyError : public std::logic_error {
 public:
  explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace g2
