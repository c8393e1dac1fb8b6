#pragma once

#include <stdexcept>
#include <string>

namespace sensecomp {

// Malformed or inconsistent input data (files, records, tables).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller violated an argument contract (bad radius, empty list, ...).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace sensecomp
