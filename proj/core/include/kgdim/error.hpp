#pragma once

#include <stdexcept>
#include <string>

namespace kgdim {

// Malformed or inconsistent input data. The CLI maps this to exit code 2.
class DataError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Caller violated a contract (bad flag combination, bad argument value).
// The CLI maps this to exit code 1.
class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace kgdim
