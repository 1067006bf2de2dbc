#pragma once

#include <stdexcept>
#include <string>

namespace braidforge {

// Domain errors: bad mathematical input (malformed word, unrepresentable bond,
// overflow in exact arithmetic, ...).  The CLI maps these to exit code 1.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when exact integer arithmetic leaves the representable range.
// Callers running bounded searches may catch this and fall back to an
// inconclusive verdict; everyone else lets it surface as a domain error.
struct OverflowError : Error {
  using Error::Error;
};

// Usage errors: bad flags, missing files.  The CLI maps these to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace braidforge
