#pragma once

#include <stdexcept>
#include <string>

namespace wilson {

// Computation errors. Precondition violations that amount to misuse of an
// API (zero modulus, empty range) are reported as std::invalid_argument.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotInvertible : public Error {
 public:
  using Error::Error;
};

class NotAUnit : public Error {
 public:
  using Error::Error;
};

class NotPrime : public Error {
 public:
  using Error::Error;
};

class EnumerationTooLarge : public Error {
 public:
  using Error::Error;
};

class RangeTooLarge : public Error {
 public:
  using Error::Error;
};

}  // namespace wilson
