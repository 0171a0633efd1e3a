#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace reskp {

// Base of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class SizeOutOfRange : public Error {
 public:
  explicit SizeOutOfRange(std::size_t index)
      : Error("item size out of range (0, 1] at index " + std::to_string(index)),
        index_(index) {}
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

class AlphaOutOfRange : public Error {
 public:
  using Error::Error;
};

class CapacityExceeded : public Error {
 public:
  using Error::Error;
};

class AlreadyStopped : public Error {
 public:
  using Error::Error;
};

// A Finalize or end-of-sequence selection that is not a sub-multiset of the
// items available to it.
class InvalidSelection : public Error {
 public:
  using Error::Error;
};

// A policy produced an illegal action. Raised by the runners; indicates a bug
// in the policy rather than bad input.
class PolicyFault : public Error {
 public:
  using Error::Error;
};

class InputTooLarge : public Error {
 public:
  using Error::Error;
};

class OutOfDomain : public Error {
 public:
  using Error::Error;
};

// Two enclosures still overlap at the finest permitted precision.
class PrecisionExhausted : public Error {
 public:
  using Error::Error;
};

class DeltaOutOfRange : public Error {
 public:
  using Error::Error;
};

class ParameterOutOfRange : public Error {
 public:
  using Error::Error;
};

class NotApplicable : public Error {
 public:
  using Error::Error;
};

}  // namespace reskp
