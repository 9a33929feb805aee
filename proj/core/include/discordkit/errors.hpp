#pragma once

#include <stdexcept>
#include <string>

namespace discordkit {

/// Bad search parameters or arguments (maps to CLI exit code 1).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// File access or parse failure (maps to CLI exit code 2).
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exact algorithm disagreed with itself or with another exact algorithm
/// (maps to CLI exit code 3).
class CorrectnessError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A caller broke a documented precondition, e.g. asked for the distance of
/// two overlapping windows.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace discordkit
