#pragma once

#include <stdexcept>
#include <string>

namespace ridematch {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-domain input (bad enum value, dimension mismatch,
// weight outside [0,10], role mismatch, ...).
class InvalidInputError : public Error {
 public:
  using Error::Error;
};

// An operation received an empty collection where at least one element is
// required (e.g. ranking with no candidates).
class EmptyInputError : public Error {
 public:
  using Error::Error;
};

// A combinatorial guard refused to run (e.g. brute-force enumeration above
// the factorial size limit).
class ResourceGuardError : public Error {
 public:
  using Error::Error;
};

// The requested algorithm cannot handle the instance (e.g. the equal-sets
// baseline on unequal sets).
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

// A metric or ratio is undefined for the given input (empty matching,
// zero optimal objective).
class UndefinedMetricError : public Error {
 public:
  using Error::Error;
};

}  // namespace ridematch
