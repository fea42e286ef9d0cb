#pragma once

#include <stdexcept>
#include <string>

namespace qoseval {

/// A file could not be opened or read (CLI exit code 2).
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input parsed but violates the schema or a domain invariant (CLI exit code 1).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qoseval
