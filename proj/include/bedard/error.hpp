#pragma once

#include <stdexcept>
#include <string>

namespace bedard {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Group enumeration produced more elements than the configured cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

class UnknownType : public Error {
 public:
  using Error::Error;
};

/// The presentation is outside what the integer root engine handles
/// (non-crystallographic labels, malformed matrices).
class InvalidPresentation : public Error {
 public:
  using Error::Error;
};

/// Strict ad_subset: some conjugate w s w^-1 is not a simple reflection.
class NotSimple : public Error {
 public:
  using Error::Error;
};

class TwistNotSimpleOnSubset : public Error {
 public:
  using Error::Error;
};

class InvalidTwist : public Error {
 public:
  using Error::Error;
};

class NotMinimalInput : public Error {
 public:
  using Error::Error;
};

class NotStabilized : public Error {
 public:
  using Error::Error;
};

class NotGoodPosition : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Brute-force enumeration would exceed the configured point budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class Overflow : public Error {
 public:
  using Error::Error;
};

/// Raised when an invariant that the theory guarantees is observed to fail.
class InternalError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace bedard
