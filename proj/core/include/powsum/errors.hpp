#pragma once

#include <stdexcept>
#include <string>

namespace powsum {

// Base class for all errors raised by this library. Anything thrown on a
// non-bug path derives from it, so callers can catch powsum::Error and map
// it to an exit code without enumerating subclasses.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A point has fewer than three distinct coordinate values, so the orbit-type
// machinery for smooth points does not apply there.
class SingularPointError : public Error {
 public:
  using Error::Error;
};

// The constraint Jacobian dropped rank where full rank was required.
class RankDeficientError : public Error {
 public:
  using Error::Error;
};

// An operation was invoked for a level c outside the regime it supports.
class WrongRegimeError : public Error {
 public:
  using Error::Error;
};

// Two reduction-cubic roots (or clustered coordinate values) coincide to
// within tolerance, so a classification that needs them separated is
// ill-posed.
class DegenerateRootError : public Error {
 public:
  using Error::Error;
};

// The requested operation needs a positive-dimensional surface (or at least
// a nonempty one) and the level c does not provide it.
class DegenerateRegimeError : public Error {
 public:
  using Error::Error;
};

// Euler characteristic, component count and genus fail to satisfy the
// defining relation chi = 2*components - 2*genus with integer genus >= 0.
class InconsistentTopologyError : public Error {
 public:
  using Error::Error;
};

}  // namespace powsum
