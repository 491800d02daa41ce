#pragma once

#include <stdexcept>
#include <string>

namespace diffseq {

// Precondition violations on arguments (zero lengths, unsorted positions, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A request would exceed a configured size limit.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Serialized input that cannot be decoded.
class MalformedInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace diffseq
