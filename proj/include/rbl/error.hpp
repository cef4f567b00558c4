#pragma once

#include <stdexcept>
#include <string>

namespace rbl {

// Caller supplied malformed or out-of-range arguments.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A documented hypothesis of the operation does not hold for the argument.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Memory-style budget (tuple counts, subset counts) would be exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rbl
