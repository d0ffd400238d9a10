#pragma once

#include <stdexcept>
#include <string>

namespace bentlab {

// Base of everything the library throws on its own account.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: degree out of range, bad modulus, unparsable text.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Two values built over different fields were combined.
class FieldMismatch : public Error {
 public:
  FieldMismatch() : Error("field elements belong to different fields") {}
};

// A construction's algebraic precondition does not hold
// (e.g. lambda^(2^m+1) != 1, or a binomial that cannot be inverted as one).
class ConditionViolation : public Error {
 public:
  using Error::Error;
};

// The request exceeds a size limit of an exhaustive or in-memory path.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

}  // namespace bentlab
