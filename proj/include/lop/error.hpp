#pragma once

#include <stdexcept>
#include <string>

namespace lop {

// Bad shapes, out-of-range indices, repeated elements.
class InvalidArgument : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Work that would exceed a configured cap (enumeration limit).
class ResourceLimit : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Input does not satisfy an algorithm's structural precondition.
class PreconditionViolation : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A generator produced a matrix that fails its own validator. Always a bug.
class GeneratorInvariant : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace lop
