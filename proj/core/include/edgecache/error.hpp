#pragma once

#include <stdexcept>
#include <string>

namespace edgecache {

/// A caller-supplied parameter is outside its valid domain.
class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was invoked with its precondition violated (e.g. touching an
/// object that is not cached).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A numerical solver could not produce a finite answer.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace edgecache
