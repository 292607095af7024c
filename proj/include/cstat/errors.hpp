#pragma once

#include <stdexcept>
#include <string>

namespace cstat {

// Malformed arguments: bad permutations, unknown selectors, violated preconditions.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A requested enumeration or oracle exceeds its configured size bound.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal self-check failed (non-vanishing series tail, residual, non-integral result).
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace cstat
